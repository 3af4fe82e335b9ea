#include "symrig/numeric_oracle.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "symrig/rational.hpp"

namespace symrig {

// --------------------------------------------------------------------------
// Exact row reduction
// --------------------------------------------------------------------------

int exact_rank(CycloMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    }
    for (int r = rank + 1; r < m.rows; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const CycloRat factor = m.at(r, col) / m.at(rank, col);
      for (int c = col; c < m.cols; ++c) {
        m.at(r, c) = m.at(r, c) - factor * m.at(rank, c);
      }
    }
    ++rank;
  }
  return rank;
}

CycloMatrix row_submatrix(const CycloMatrix& m, Bitset64 rows) {
  CycloMatrix out(popcount(rows), m.cols);
  int r = 0;
  for_each_bit(rows, [&](int i) {
    if (i >= m.rows) throw std::invalid_argument("row index out of range");
    for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(i, c);
    ++r;
  });
  return out;
}

Eigen::MatrixXcd to_dense(const CycloMatrix& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) out(r, c) = m.at(r, c).to_complex();
  }
  return out;
}

// --------------------------------------------------------------------------
// Symbol matrices
// --------------------------------------------------------------------------

CycloMatrix build_m_exact(const GainGraph& g) {
  if (!g.exact()) {
    throw std::invalid_argument("build_m_exact: graph has numeric gains");
  }
  CycloMatrix m(g.arc_count(), g.vertex_count());
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    const CycloRat t = a.gain.rotation_unit();
    const CycloRat one(Rational(1), 1);
    if (a.is_loop()) {
      m.at(e, a.from) = one - t;
    } else {
      m.at(e, a.from) = one;
      m.at(e, a.to) = -t;
    }
  }
  return m;
}

CycloMatrix build_ml_exact(const GainGraph& g) {
  const CycloMatrix base = build_m_exact(g);
  CycloMatrix m(base.rows, base.cols + 1);
  for (int r = 0; r < base.rows; ++r) {
    for (int c = 0; c < base.cols; ++c) m.at(r, c) = base.at(r, c);
    m.at(r, base.cols) = -g.arc(r).gain.translation();
  }
  return m;
}

Eigen::MatrixXcd build_m(const GainGraph& g) {
  if (g.exact()) return to_dense(build_m_exact(g));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(g.arc_count(), g.vertex_count());
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    const std::complex<double> t = std::polar(1.0, a.gain.angle());
    if (a.is_loop()) {
      m(e, a.from) = 1.0 - t;
    } else {
      m(e, a.from) = 1.0;
      m(e, a.to) = -t;
    }
  }
  return m;
}

Eigen::MatrixXcd build_ml(const GainGraph& g) {
  const Eigen::MatrixXcd base = build_m(g);
  Eigen::MatrixXcd m(base.rows(), base.cols() + 1);
  m.leftCols(base.cols()) = base;
  for (int e = 0; e < g.arc_count(); ++e) {
    const Isometry& gain = g.arc(e).gain;
    m(e, base.cols()) = gain.is_exact() ? -gain.translation().to_complex()
                                        : -gain.translation_numeric();
  }
  return m;
}

// --------------------------------------------------------------------------
// Numeric rank
// --------------------------------------------------------------------------

namespace {

template <typename Matrix>
RankEstimate svd_rank(const Matrix& m, double tol) {
  RankEstimate est;
  est.tol = tol;
  if (m.rows() == 0 || m.cols() == 0) return est;
  Eigen::JacobiSVD<Matrix> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = tol * sv(0);
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff && sv(i) > 0.0) {
      est.rank = i + 1;
      est.smallest_kept = sv(i);
    } else {
      est.largest_cut = sv(i);
      break;
    }
  }
  return est;
}

}  // namespace

RankEstimate numeric_rank(const Eigen::MatrixXd& m, double tol) {
  return svd_rank(m, tol);
}

RankEstimate numeric_rank(const Eigen::MatrixXcd& m, double tol) {
  return svd_rank(m, tol);
}

// --------------------------------------------------------------------------
// Random configurations
// --------------------------------------------------------------------------

double UniformSampler::next() {
  // splitmix64 step, then 53 mantissa bits mapped onto [-1, 1).
  state_ += 0x9E3779B97F4A7C15ULL;
  unsigned long long z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return 2.0 * (static_cast<double>(z >> 11) * 0x1.0p-53) - 1.0;
}

namespace {

unsigned long long trial_seed(unsigned long long seed, int trial) {
  return seed ^ (0x9E3779B97F4A7C15ULL * static_cast<unsigned long long>(trial + 1));
}

void arc_motion(const Arc& a, double* angle, Eigen::Vector2d* tau) {
  *angle = a.gain.angle();
  if (a.gain.is_exact()) {
    const std::complex<double> c = a.gain.translation().to_complex();
    *tau = Eigen::Vector2d(c.real(), c.imag());
  } else {
    const std::complex<double> c = a.gain.translation_numeric();
    *tau = Eigen::Vector2d(c.real(), c.imag());
  }
}

}  // namespace

Eigen::VectorXd orbit_lengths(const GainGraph& g, const Eigen::VectorXd& p) {
  if (p.size() != 2 * g.vertex_count()) {
    throw std::invalid_argument("configuration size mismatch");
  }
  Eigen::VectorXd out(g.arc_count());
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    double angle = 0.0;
    Eigen::Vector2d tau;
    arc_motion(a, &angle, &tau);
    Eigen::Matrix2d rot;
    rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    const Eigen::Vector2d pu = p.segment<2>(2 * a.from);
    const Eigen::Vector2d pv = p.segment<2>(2 * a.to);
    out(e) = (pu - rot * pv - tau).squaredNorm();
  }
  return out;
}

Eigen::MatrixXd orbit_jacobian(const GainGraph& g, const Eigen::VectorXd& p) {
  if (p.size() != 2 * g.vertex_count()) {
    throw std::invalid_argument("configuration size mismatch");
  }
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(g.arc_count(), p.size());
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    double angle = 0.0;
    Eigen::Vector2d tau;
    arc_motion(a, &angle, &tau);
    Eigen::Matrix2d rot;
    rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    const Eigen::Vector2d pu = p.segment<2>(2 * a.from);
    const Eigen::Vector2d pv = p.segment<2>(2 * a.to);
    const Eigen::Vector2d r = pu - rot * pv - tau;
    // A loop contributes through both occurrences of its vertex; the +=
    // accumulation realizes the chain rule in that case.
    jac.block<1, 2>(e, 2 * a.from) += 2.0 * r.transpose();
    jac.block<1, 2>(e, 2 * a.to) += -2.0 * (rot.transpose() * r).transpose();
  }
  return jac;
}

RankEstimate generic_rank(const GainGraph& g, ArcSet s, int trials, double tol,
                          unsigned long long seed) {
  if (trials < 1) throw std::invalid_argument("generic_rank: trials < 1");
  if ((s & ~g.all_arcs()) != 0) {
    throw std::invalid_argument("generic_rank: arc subset out of range");
  }
  RankEstimate best;
  best.tol = tol;
  best.trials = trials;
  if (s == 0) return best;
  for (int t = 0; t < trials; ++t) {
    UniformSampler sampler(trial_seed(seed, t));
    Eigen::VectorXd p(2 * g.vertex_count());
    for (int i = 0; i < p.size(); ++i) p(i) = sampler.next();
    const Eigen::MatrixXd full = orbit_jacobian(g, p);
    Eigen::MatrixXd rows(popcount(s), full.cols());
    int r = 0;
    for_each_bit(s, [&](int e) { rows.row(r++) = full.row(e); });
    RankEstimate est = numeric_rank(rows, tol);
    if (est.rank > best.rank ||
        (est.rank == best.rank && est.smallest_kept > best.smallest_kept)) {
      best.rank = est.rank;
      best.smallest_kept = est.smallest_kept;
      best.largest_cut = est.largest_cut;
    }
  }
  return best;
}

RankEstimate generic_rank(const GainGraph& g, int trials, double tol,
                          unsigned long long seed) {
  return generic_rank(g, g.all_arcs(), trials, tol, seed);
}

// --------------------------------------------------------------------------
// Coordinatewise products of affine spaces
// --------------------------------------------------------------------------

namespace {

Eigen::VectorXcd random_complex(UniformSampler& sampler, Eigen::Index n) {
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = sampler.next();
    const double im = sampler.next();
    v(i) = std::complex<double>(re, im);
  }
  return v;
}

}  // namespace

RankEstimate hadamard_rank(const AffineSpace& u, const AffineSpace& v,
                           Bitset64 coords, int trials, double tol,
                           unsigned long long seed) {
  if (trials < 1) throw std::invalid_argument("hadamard_rank: trials < 1");
  const Eigen::Index n = u.map.rows();
  if (v.map.rows() != n || u.offset.size() != n || v.offset.size() != n) {
    throw std::invalid_argument("hadamard_rank: inconsistent row counts");
  }
  if ((coords & ~full_mask(static_cast<int>(n))) != 0) {
    throw std::invalid_argument("hadamard_rank: coordinate out of range");
  }
  RankEstimate best;
  best.tol = tol;
  best.trials = trials;
  if (coords == 0) return best;
  const Eigen::Index du = u.map.cols();
  const Eigen::Index dv = v.map.cols();
  for (int t = 0; t < trials; ++t) {
    UniformSampler sampler(trial_seed(seed, t));
    const Eigen::VectorXcd x = random_complex(sampler, du);
    const Eigen::VectorXcd y = random_complex(sampler, dv);
    const Eigen::VectorXcd uvec = u.map * x + u.offset;
    const Eigen::VectorXcd vvec = v.map * y + v.offset;
    Eigen::MatrixXcd jac(popcount(coords), du + dv);
    int r = 0;
    for_each_bit(coords, [&](int e) {
      jac.block(r, 0, 1, du) = vvec(e) * u.map.row(e);
      jac.block(r, du, 1, dv) = uvec(e) * v.map.row(e);
      ++r;
    });
    const RankEstimate est = numeric_rank(jac, tol);
    if (est.rank > best.rank ||
        (est.rank == best.rank && est.smallest_kept > best.smallest_kept)) {
      best.rank = est.rank;
      best.smallest_kept = est.smallest_kept;
      best.largest_cut = est.largest_cut;
    }
  }
  return best;
}

std::pair<AffineSpace, AffineSpace> ml_affine_space(const GainGraph& g) {
  const Eigen::MatrixXcd ml = build_ml(g);
  const Eigen::Index n = g.vertex_count();
  AffineSpace u;
  u.map = ml.leftCols(n);
  u.offset = ml.col(n);  // already -c(translation part)
  AffineSpace v;
  v.map = u.map.conjugate();
  v.offset = u.offset.conjugate();
  return {u, v};
}

// --------------------------------------------------------------------------
// d-fold product probe
// --------------------------------------------------------------------------

namespace {

// Matroid of the rows of a complex matrix, rank by SVD with a tight cut.
class RowMatroid final : public RankOracle {
 public:
  explicit RowMatroid(const Eigen::MatrixXcd& m) : m_(m) {}
  int ground_size() const override { return static_cast<int>(m_.rows()); }
  int rank(Subset s) const override {
    if (s == 0) return 0;
    Eigen::MatrixXcd rows(popcount(s), m_.cols());
    int r = 0;
    for_each_bit(s, [&](int e) { rows.row(r++) = m_.row(e); });
    return numeric_rank(rows, 1e-10).rank;
  }

 private:
  Eigen::MatrixXcd m_;
};

}  // namespace

ProbeRecord conjecture_probe(const std::vector<Eigen::MatrixXcd>& spaces,
                             Bitset64 coords, int trials, double tol,
                             unsigned long long seed) {
  const int d = static_cast<int>(spaces.size());
  if (d < 2 || d > 4) {
    throw std::invalid_argument("conjecture_probe: need between 2 and 4 spaces");
  }
  const Eigen::Index n = spaces.front().rows();
  if (n > 8) throw std::invalid_argument("conjecture_probe: more than 8 coordinates");
  for (const auto& sp : spaces) {
    if (sp.rows() != n) {
      throw std::invalid_argument("conjecture_probe: inconsistent row counts");
    }
  }
  if ((coords & ~full_mask(static_cast<int>(n))) != 0) {
    throw std::invalid_argument("conjecture_probe: coordinate out of range");
  }

  ProbeRecord rec;
  rec.d = d;
  rec.coords = coords;

  // Combinatorial side: Edmonds matroid of the summed row-matroid ranks.
  std::vector<RowMatroid> matroids;
  matroids.reserve(spaces.size());
  for (const auto& sp : spaces) matroids.emplace_back(sp);
  SubmodularFn f{static_cast<int>(n), [&](Subset s) -> long long {
                   long long total = 0;
                   for (const auto& m : matroids) total += m.rank(s);
                   return total - (d - 1);
                 }};
  rec.combinatorial = greedy_rank(
      static_cast<int>(n),
      [&](Subset t) { return edmonds_independent(f, t); }, coords);

  // Numeric side: Jacobian of the d-fold coordinatewise product.
  if (coords != 0) {
    for (int t = 0; t < trials; ++t) {
      UniformSampler sampler(trial_seed(seed, t));
      std::vector<Eigen::VectorXcd> xs;
      std::vector<Eigen::VectorXcd> vals;
      Eigen::Index total_cols = 0;
      for (const auto& sp : spaces) {
        xs.push_back(random_complex(sampler, sp.cols()));
        vals.push_back(sp * xs.back());
        total_cols += sp.cols();
      }
      Eigen::MatrixXcd jac(popcount(coords), total_cols);
      int r = 0;
      for_each_bit(coords, [&](int e) {
        Eigen::Index col = 0;
        for (std::size_t j = 0; j < spaces.size(); ++j) {
          std::complex<double> prod(1.0, 0.0);
          for (std::size_t i = 0; i < spaces.size(); ++i) {
            if (i != j) prod *= vals[i](e);
          }
          jac.block(r, col, 1, spaces[j].cols()) = prod * spaces[j].row(e);
          col += spaces[j].cols();
        }
        ++r;
      });
      rec.numeric = std::max(rec.numeric, numeric_rank(jac, tol).rank);
    }
  }
  rec.agree = rec.numeric == rec.combinatorial;
  return rec;
}

// --------------------------------------------------------------------------
// Covering framework
// --------------------------------------------------------------------------

namespace {

std::string element_key(const Isometry& iso) {
  std::string key = std::to_string(iso.rotation_exponent());
  for (const Rational& c : iso.translation().coeffs()) {
    key += '|';
    key += format_rational(c);
  }
  return key;
}

double translation_length(const Isometry& iso) {
  return std::abs(iso.translation().to_complex());
}

}  // namespace

Framework expand_covering(const GainGraph& g, double translation_bound,
                          unsigned long long seed, int max_elements) {
  if (!g.exact()) {
    throw std::invalid_argument("expand_covering: requires exact gains");
  }
  if (translation_bound < 0) {
    throw std::invalid_argument("expand_covering: negative translation bound");
  }

  // Generators: each arc gain and its inverse.
  std::vector<Isometry> gens;
  for (const Arc& a : g.arcs()) {
    gens.push_back(a.gain);
    gens.push_back(a.gain.inverse());
  }

  // Breadth-first closure, keeping elements whose translation stays within
  // the bound.  The kept set is deterministic: arcs in index order, gain
  // before inverse.
  std::vector<Isometry> elements{g.identity_gain()};
  std::map<std::string, int> index{{element_key(elements[0]), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Isometry& gen : gens) {
      const Isometry next = compose(elements[head], gen);
      if (translation_length(next) > translation_bound + 1e-9) continue;
      const std::string key = element_key(next);
      if (index.count(key)) continue;
      if (static_cast<int>(elements.size()) >= max_elements) {
        throw LimitExceeded("expand_covering: group fragment exceeds " +
                            std::to_string(max_elements) + " elements");
      }
      index.emplace(key, static_cast<int>(elements.size()));
      elements.push_back(next);
    }
  }

  // Seeded generic placement of the base vertices, pushed forward.
  UniformSampler sampler(seed);
  std::vector<Eigen::Vector2d> base(static_cast<std::size_t>(g.vertex_count()));
  for (auto& p : base) {
    p.x() = sampler.next();
    p.y() = sampler.next();
  }

  Framework fw;
  const int n = g.vertex_count();
  const bool trivial_group = elements.size() == 1;
  for (std::size_t s = 0; s < elements.size(); ++s) {
    const Isometry& iso = elements[s];
    const double angle = iso.angle();
    Eigen::Matrix2d rot;
    rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    const std::complex<double> tc = iso.translation().to_complex();
    const Eigen::Vector2d tau(tc.real(), tc.imag());
    for (int v = 0; v < n; ++v) {
      fw.labels.push_back(trivial_group
                              ? std::to_string(v)
                              : "g" + std::to_string(s) + ":" + std::to_string(v));
      fw.element_index.push_back(static_cast<int>(s));
      fw.base_vertex.push_back(v);
      const Eigen::Vector2d q = rot * base[static_cast<std::size_t>(v)] + tau;
      fw.coords.push_back({q.x(), q.y()});
    }
  }

  std::set<std::pair<int, int>> seen;
  for (const Arc& a : g.arcs()) {
    for (std::size_t s = 0; s < elements.size(); ++s) {
      const Isometry target_elt = compose(elements[s], a.gain);
      const auto it = index.find(element_key(target_elt));
      if (it == index.end()) continue;  // endpoint outside the fragment
      const int p = static_cast<int>(s) * n + a.from;
      const int q = it->second * n + a.to;
      const auto key = std::minmax(p, q);
      if (seen.emplace(key.first, key.second).second) {
        fw.edges.emplace_back(key.first, key.second);
      }
    }
  }
  return fw;
}

}  // namespace symrig
