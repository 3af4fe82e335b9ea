#include "symrig/lab.hpp"

#include <Eigen/Dense>
#include <sstream>
#include <utility>

namespace symrig {

namespace {

std::string subset_string(Subset s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_bit(s, [&](int e) {
    if (!first) os << ',';
    os << e;
    first = false;
  });
  os << '}';
  return os.str();
}

void tally(LabReport& rep, LabResult res) {
  (res.pass ? rep.passed : rep.failed)++;
  rep.results.push_back(std::move(res));
}

Eigen::MatrixXcd incidence_space(int vertices,
                                 const std::vector<std::pair<int, int>>& edges) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(edges.size()), vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    m(static_cast<Eigen::Index>(e), edges[e].first) = 1.0;
    m(static_cast<Eigen::Index>(e), edges[e].second) = -1.0;
  }
  return m;
}

const std::vector<std::pair<int, int>> kTriangleEdges{{0, 1}, {1, 2}, {0, 2}};
const std::vector<std::pair<int, int>> kK4Edges{{0, 1}, {0, 2}, {0, 3},
                                                {1, 2}, {1, 3}, {2, 3}};

}  // namespace

std::vector<LabInstance> matroid_family(int max_ground) {
  std::vector<LabInstance> fam;
  auto add_graphic = [&](const char* name, int n,
                         std::vector<std::pair<int, int>> edges) {
    if (static_cast<int>(edges.size()) > max_ground) return;
    fam.push_back(
        {name, std::make_shared<GraphicMatroid>(n, std::move(edges)), true});
  };
  add_graphic("graphic(K2)", 2, {{0, 1}});
  add_graphic("graphic(2K2)", 4, {{0, 1}, {2, 3}});
  add_graphic("graphic(P3)", 3, {{0, 1}, {1, 2}});
  add_graphic("graphic(K3)", 3, kTriangleEdges);
  add_graphic("graphic(P4)", 4, {{0, 1}, {1, 2}, {2, 3}});
  add_graphic("graphic(K13)", 4, {{0, 1}, {0, 2}, {0, 3}});
  add_graphic("graphic(C4)", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  add_graphic("graphic(paw)", 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  add_graphic("graphic(diamond)", 4,
              {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
  add_graphic("graphic(K4)", 4, kK4Edges);
  for (int k = 1; k <= 5 && k <= max_ground; ++k) {
    for (int r = 0; r <= k; ++r) {
      fam.push_back({"uniform(" + std::to_string(r) + "," + std::to_string(k) +
                         ")",
                     std::make_shared<UniformMatroid>(r, k), r >= 1});
    }
  }
  return fam;
}

LabReport run_union_check(int max_ground) {
  LabReport rep;
  rep.check = "union-check";
  const std::vector<LabInstance> fam = matroid_family(max_ground);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i; j < fam.size(); ++j) {
      const RankOracle& m1 = *fam[i].matroid;
      const RankOracle& m2 = *fam[j].matroid;
      if (m1.ground_size() != m2.ground_size()) continue;
      LabResult res;
      res.name = fam[i].name + " + " + fam[j].name;
      const SubmodularFn f{m1.ground_size(), [&](Subset t) -> long long {
                             return m1.rank(t) + m2.rank(t);
                           }};
      for_each_submask_ascending(m1.ground(), [&](Subset I) {
        if (!res.pass) return;
        const bool via_union = union_independent(m1, m2, I);
        const bool via_edmonds = edmonds_independent(f, I);
        if (via_union != via_edmonds) {
          res.pass = false;
          res.detail = "subset " + subset_string(I) + ": partition search says " +
                       (via_union ? "independent" : "dependent") +
                       ", set-function quantifier disagrees";
        }
      });
      tally(rep, std::move(res));
    }
  }
  return rep;
}

LabReport run_hgraph_check(int max_ground) {
  LabReport rep;
  rep.check = "hgraph-check";
  const std::vector<LabInstance> fam = matroid_family(max_ground);
  std::vector<std::vector<Flag>> flag_cache(fam.size());
  std::vector<bool> cached(fam.size(), false);
  auto flags_of = [&](std::size_t idx) -> const std::vector<Flag>& {
    if (!cached[idx]) {
      flag_cache[idx] = enumerate_flags(*fam[idx].matroid);
      cached[idx] = true;
    }
    return flag_cache[idx];
  };
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!fam[i].loopless) continue;
    for (std::size_t j = i; j < fam.size(); ++j) {
      if (!fam[j].loopless) continue;
      const RankOracle& m = *fam[i].matroid;
      const RankOracle& n = *fam[j].matroid;
      if (m.ground_size() != n.ground_size()) continue;
      LabResult res;
      res.name = fam[i].name + " + " + fam[j].name;
      for_each_submask_ascending(m.ground(), [&](Subset s) {
        if (!res.pass) return;
        const bool via_edmonds = sum_minus_one_independent_edmonds(m, n, s);
        const bool via_flags =
            sum_minus_one_independent_flags(flags_of(i), flags_of(j), s);
        if (via_edmonds != via_flags) {
          res.pass = false;
          res.detail = "subset " + subset_string(s) +
                       ": set-function route says " +
                       (via_edmonds ? "independent" : "dependent") +
                       ", flag route disagrees";
        }
      });
      tally(rep, std::move(res));
    }
  }
  return rep;
}

LabReport run_hadamard_check(unsigned long long seed) {
  LabReport rep;
  rep.check = "hadamard-check";

  {
    LabResult res;
    res.name = "all-ones line, one coordinate -> rank 1";
    const AffineSpace line{Eigen::MatrixXcd::Ones(3, 1),
                           Eigen::VectorXcd::Zero(3)};
    const RankEstimate est = hadamard_rank(line, line, bit(0),
                                           kDefaultRankTrials, kDefaultRankTol,
                                           seed);
    if (est.rank != 1) {
      res.pass = false;
      res.detail = "expected rank 1, got " + std::to_string(est.rank);
    }
    tally(rep, std::move(res));
  }

  {
    LabResult res;
    res.name = "triangle incidence pair, all coordinates -> rank 3";
    const AffineSpace tri{incidence_space(3, kTriangleEdges),
                          Eigen::VectorXcd::Zero(3)};
    const RankEstimate est = hadamard_rank(tri, tri, full_mask(3),
                                           kDefaultRankTrials, kDefaultRankTol,
                                           seed);
    if (est.rank != 3) {
      res.pass = false;
      res.detail = "expected rank 3, got " + std::to_string(est.rank);
    }
    tally(rep, std::move(res));
  }

  // Structured pair with a non-uniform row matroid: both sides the incidence
  // space of K4 (row matroid = graphic K4).  Compare numeric independence of
  // every coordinate subset with the set-function route for r + r - 1.
  {
    LabResult res;
    res.name = "K4 incidence pair vs set-function route, all 64 subsets";
    const AffineSpace k4{incidence_space(4, kK4Edges),
                         Eigen::VectorXcd::Zero(6)};
    const GraphicMatroid gm(4, kK4Edges);
    for_each_submask_ascending(full_mask(6), [&](Subset s) {
      if (!res.pass) return;
      const RankEstimate est = hadamard_rank(k4, k4, s, kDefaultRankTrials,
                                             kDefaultRankTol, seed);
      const bool numeric = est.rank == popcount(s);
      const bool comb = sum_minus_one_independent_edmonds(gm, gm, s);
      if (numeric != comb) {
        res.pass = false;
        res.detail = "subset " + subset_string(s) + ": numeric rank " +
                     std::to_string(est.rank) + " vs combinatorial " +
                     (comb ? "independent" : "dependent");
      }
    });
    tally(rep, std::move(res));
  }

  // Generic pair: random 5x2 and 5x3 maps, whose row matroids are U(2,5)
  // and U(3,5) (verified numerically before use).
  {
    LabResult res;
    res.name = "generic U(2,5) x U(3,5) pair vs set-function route";
    UniformSampler sampler(seed);
    auto random_matrix = [&](int rows, int cols) {
      Eigen::MatrixXcd m(rows, cols);
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          m(r, c) = std::complex<double>(sampler.next(), sampler.next());
        }
      }
      return m;
    };
    const Eigen::MatrixXcd a = random_matrix(5, 2);
    const Eigen::MatrixXcd b = random_matrix(5, 3);
    const UniformMatroid mu(2, 5);
    const UniformMatroid nu(3, 5);
    auto rows_generic = [&](const Eigen::MatrixXcd& m, const RankOracle& want) {
      bool ok = true;
      for_each_submask_ascending(full_mask(static_cast<int>(m.rows())),
                                 [&](Subset s) {
                                   if (!ok || s == 0) return;
                                   Eigen::MatrixXcd sub(popcount(s), m.cols());
                                   int r = 0;
                                   for_each_bit(s, [&](int e) {
                                     sub.row(r++) = m.row(e);
                                   });
                                   if (numeric_rank(sub).rank != want.rank(s))
                                     ok = false;
                                 });
      return ok;
    };
    if (!rows_generic(a, mu) || !rows_generic(b, nu)) {
      res.pass = false;
      res.detail = "sampled matrix is not generic for this seed";
    } else {
      const AffineSpace u{a, Eigen::VectorXcd::Zero(5)};
      const AffineSpace v{b, Eigen::VectorXcd::Zero(5)};
      for_each_submask_ascending(full_mask(5), [&](Subset s) {
        if (!res.pass) return;
        const RankEstimate est = hadamard_rank(u, v, s, kDefaultRankTrials,
                                               kDefaultRankTol, seed);
        const bool numeric = est.rank == popcount(s);
        const bool comb = sum_minus_one_independent_edmonds(mu, nu, s);
        if (numeric != comb) {
          res.pass = false;
          res.detail = "subset " + subset_string(s) + ": numeric rank " +
                       std::to_string(est.rank) + " vs combinatorial " +
                       (comb ? "independent" : "dependent");
        }
      });
    }
    tally(rep, std::move(res));
  }

  return rep;
}

ProbeReport run_conjecture_probe(unsigned long long seed) {
  ProbeReport rep;
  const Eigen::MatrixXcd k3 = incidence_space(3, kTriangleEdges);
  const Eigen::MatrixXcd k4 = incidence_space(4, kK4Edges);
  auto push = [&](std::string name, std::vector<Eigen::MatrixXcd> spaces,
                  Bitset64 coords) {
    const ProbeRecord record = conjecture_probe(
        spaces, coords, kDefaultRankTrials, kDefaultRankTol, seed);
    (record.agree ? rep.agreements : rep.disagreements)++;
    rep.names.push_back(std::move(name));
    rep.records.push_back(record);
  };
  push("d=2 triangle pair (theorem case)", {k3, k3}, full_mask(3));
  push("d=3 triangle triple, all coordinates", {k3, k3, k3}, full_mask(3));
  push("d=3 K4 triple, all coordinates", {k4, k4, k4}, full_mask(6));
  push("d=3 K4 triple, one coordinate dropped", {k4, k4, k4},
       full_mask(6) & ~bit(2));
  push("d=4 triangle quadruple", {k3, k3, k3, k3}, full_mask(3));
  push("d=3 triangle triple, empty subset", {k3, k3, k3}, 0);
  return rep;
}

}  // namespace symrig
