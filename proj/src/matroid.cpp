#include "symrig/matroid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symrig {

namespace {

void check_ground(int size, int cap, const char* what) {
  if (size > cap) {
    throw LimitExceeded(std::string(what) + ": ground set of " +
                        std::to_string(size) + " elements exceeds cap " +
                        std::to_string(cap));
  }
}

}  // namespace

// --------------------------------------------------------------------------
// Graphic and uniform matroids
// --------------------------------------------------------------------------

GraphicMatroid::GraphicMatroid(int vertices,
                               std::vector<std::pair<int, int>> edges)
    : n_(vertices), edges_(std::move(edges)) {
  if (vertices < 0) throw std::invalid_argument("negative vertex count");
  if (edges_.size() > 64) throw std::invalid_argument("more than 64 edges");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

int GraphicMatroid::rank(Subset s) const {
  UnionFind uf(n_);
  int r = 0;
  for_each_bit(s, [&](int e) {
    const auto& [u, v] = edges_[static_cast<std::size_t>(e)];
    if (u != v && uf.unite(u, v)) ++r;
  });
  return r;
}

UniformMatroid::UniformMatroid(int rank, int ground_size)
    : rank_(rank), ground_(ground_size) {
  if (rank < 0 || ground_size < 0 || rank > ground_size || ground_size > 64) {
    throw std::invalid_argument("bad uniform matroid parameters");
  }
}

int UniformMatroid::rank(Subset s) const {
  return std::min(rank_, popcount(s));
}

// --------------------------------------------------------------------------
// Set-function matroids
// --------------------------------------------------------------------------

void validate_submodular(const SubmodularFn& f, int max_check) {
  check_ground(f.ground, max_check, "validate_submodular");
  const Subset ground = full_mask(f.ground);
  for (Subset s = 0; s <= ground; ++s) {
    if ((s & ~ground) != 0) continue;
    const long long fs = f.value(s);
    for (int e = 0; e < f.ground; ++e) {
      if (test_bit(s, e)) continue;
      const long long fse = f.value(s | bit(e));
      if (fse < fs) {
        throw std::invalid_argument("set function is not monotone");
      }
      for (int g = e + 1; g < f.ground; ++g) {
        if (test_bit(s, g)) continue;
        const long long fsg = f.value(s | bit(g));
        const long long fseg = f.value(s | bit(e) | bit(g));
        if (fse + fsg < fseg + fs) {
          throw std::invalid_argument("set function is not submodular");
        }
      }
    }
  }
}

bool edmonds_independent(const SubmodularFn& f, Subset independent_candidate,
                         int max_elements) {
  const Subset I = independent_candidate;
  if (I == 0) return true;
  if (popcount(I) > max_elements) {
    throw LimitExceeded("edmonds_independent: subset of " +
                        std::to_string(popcount(I)) +
                        " elements exceeds cap " +
                        std::to_string(max_elements));
  }
  bool ok = true;
  for_each_submask_ascending(I, [&](Subset t) {
    if (t == 0 || !ok) return;
    if (popcount(t) > f.value(t)) ok = false;
  });
  return ok;
}

int greedy_rank(int ground_size, const std::function<bool(Subset)>& indep,
                Subset s) {
  Subset picked = 0;
  for (int e = 0; e < ground_size; ++e) {
    if (!test_bit(s, e)) continue;
    if (indep(picked | bit(e))) picked |= bit(e);
  }
  return popcount(picked);
}

int EdmondsMatroid::rank(Subset s) const {
  return greedy_rank(f_.ground,
                     [&](Subset t) { return edmonds_independent(f_, t); }, s);
}

// --------------------------------------------------------------------------
// Matroid union
// --------------------------------------------------------------------------

bool union_independent(const RankOracle& m1, const RankOracle& m2, Subset I,
                       int max_elements) {
  if (m1.ground_size() != m2.ground_size()) {
    throw std::invalid_argument("union of matroids on different ground sets");
  }
  if (popcount(I) > max_elements) {
    throw LimitExceeded("union_independent: subset of " +
                        std::to_string(popcount(I)) +
                        " elements exceeds cap " +
                        std::to_string(max_elements));
  }
  bool found = false;
  for_each_submask_ascending(I, [&](Subset t) {
    if (found) return;
    if (m1.independent(t) && m2.independent(I & ~t)) found = true;
  });
  return found;
}

UnionMatroid::UnionMatroid(const RankOracle& m1, const RankOracle& m2)
    : m1_(&m1), m2_(&m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw std::invalid_argument("union of matroids on different ground sets");
  }
}

int UnionMatroid::ground_size() const { return m1_->ground_size(); }

int UnionMatroid::rank(Subset s) const {
  return greedy_rank(
      ground_size(),
      [&](Subset t) { return union_independent(*m1_, *m2_, t); }, s);
}

// --------------------------------------------------------------------------
// Flats, flags and H-graphs
// --------------------------------------------------------------------------

Subset closure(const RankOracle& m, Subset s) {
  const int r = m.rank(s);
  Subset cl = s;
  for (int e = 0; e < m.ground_size(); ++e) {
    if (test_bit(s, e)) continue;
    if (m.rank(s | bit(e)) == r) cl |= bit(e);
  }
  return cl;
}

std::vector<Subset> matroid_flats(const RankOracle& m, int max_ground) {
  check_ground(m.ground_size(), max_ground, "matroid_flats");
  const Subset ground = m.ground();
  std::vector<Subset> flats;
  for (Subset s = 0; s <= ground; ++s) {
    if ((s & ~ground) != 0) continue;
    if (s != 0 && closure(m, s) == s) flats.push_back(s);
  }
  std::sort(flats.begin(), flats.end(), [](Subset a, Subset b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  return flats;
}

namespace {

void extend_flag(const std::vector<Subset>& flats, std::size_t last,
                 Flag& chain, std::vector<Flag>& out) {
  out.push_back(chain);
  for (std::size_t j = last + 1; j < flats.size(); ++j) {
    const Subset top = chain.back();
    if ((top & flats[j]) == top && flats[j] != top) {
      chain.push_back(flats[j]);
      extend_flag(flats, j, chain, out);
      chain.pop_back();
    }
  }
}

}  // namespace

std::vector<Flag> enumerate_flags(const RankOracle& m, int max_ground) {
  const std::vector<Subset> flats = matroid_flats(m, max_ground);
  std::vector<Flag> flags;
  Flag chain;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    chain.assign(1, flats[i]);
    extend_flag(flats, i, chain, flags);
  }
  return flags;
}

HGraph h_graph(const Flag& fl1, const Flag& fl2, Subset s) {
  HGraph h;
  h.left = static_cast<int>(fl1.size());
  h.right = static_cast<int>(fl2.size());
  for_each_bit(s, [&](int e) {
    int a = -1;
    for (std::size_t i = 0; i < fl1.size(); ++i) {
      if (test_bit(fl1[i], e)) {
        a = static_cast<int>(i);
        break;
      }
    }
    int b = -1;
    for (std::size_t i = 0; i < fl2.size(); ++i) {
      if (test_bit(fl2[i], e)) {
        b = static_cast<int>(i);
        break;
      }
    }
    if (a < 0 || b < 0) {
      h.uncovered.push_back(e);
    } else {
      h.edges.emplace_back(a, b);
    }
  });
  return h;
}

bool is_forest(const HGraph& h) {
  UnionFind uf(h.left + h.right);
  for (const auto& [a, b] : h.edges) {
    if (!uf.unite(a, h.left + b)) return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// Rank-sum-minus-one independence, two routes
// --------------------------------------------------------------------------

namespace {

void require_loopless(const RankOracle& m, const char* name) {
  for (int e = 0; e < m.ground_size(); ++e) {
    if (m.rank(bit(e)) != 1) {
      throw std::invalid_argument(std::string(name) +
                                  ": matroid has a loop; the flag route "
                                  "requires loopless matroids");
    }
  }
}

}  // namespace

bool sum_minus_one_independent_edmonds(const RankOracle& m,
                                       const RankOracle& n, Subset s) {
  if (m.ground_size() != n.ground_size()) {
    throw std::invalid_argument("matroids on different ground sets");
  }
  SubmodularFn f{m.ground_size(),
                 [&](Subset t) -> long long { return m.rank(t) + n.rank(t) - 1; }};
  return edmonds_independent(f, s);
}

bool sum_minus_one_independent_flags(const std::vector<Flag>& m_flags,
                                     const std::vector<Flag>& n_flags,
                                     Subset s) {
  if (s == 0) return true;
  for (const Flag& f1 : m_flags) {
    if ((s & ~f1.back()) != 0) continue;  // flag does not cover s
    for (const Flag& f2 : n_flags) {
      if ((s & ~f2.back()) != 0) continue;
      const HGraph h = h_graph(f1, f2, s);
      if (!h.uncovered.empty()) continue;
      if (is_forest(h)) return true;
    }
  }
  return false;
}

bool sum_minus_one_independent_flags(const RankOracle& m, const RankOracle& n,
                                     Subset s, int max_ground) {
  if (m.ground_size() != n.ground_size()) {
    throw std::invalid_argument("matroids on different ground sets");
  }
  require_loopless(m, "sum_minus_one_independent_flags");
  require_loopless(n, "sum_minus_one_independent_flags");
  return sum_minus_one_independent_flags(enumerate_flags(m, max_ground),
                                         enumerate_flags(n, max_ground), s);
}

// --------------------------------------------------------------------------
// Elementary lifts
// --------------------------------------------------------------------------

int lift_rank(const RankOracle& m, const std::function<bool(Subset)>& balanced,
              Subset s) {
  const int r = m.rank(s);
  if (s == 0) return r;
  return balanced(s) ? r : r + 1;
}

}  // namespace symrig
