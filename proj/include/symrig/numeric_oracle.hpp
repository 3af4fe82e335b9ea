#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "symrig/cyclotomic.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/matroid.hpp"

namespace symrig {

// ---------------------------------------------------------------------------
// Rank computations backing the combinatorial deciders: exact cyclotomic row
// reduction for the symbol matrices, floating-point SVD ranks at random
// configurations for everything generic.
// ---------------------------------------------------------------------------

inline constexpr double kDefaultRankTol = 1e-8;
inline constexpr int kDefaultRankTrials = 3;

// Dense matrix over the cyclotomic field, row major.
struct CycloMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<CycloRat> a;

  CycloMatrix() = default;
  CycloMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  CycloRat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const CycloRat& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

// Rank by Gaussian elimination over the exact field.
int exact_rank(CycloMatrix m);

CycloMatrix row_submatrix(const CycloMatrix& m, Bitset64 rows);

Eigen::MatrixXcd to_dense(const CycloMatrix& m);

// Symbol matrix of the rotation parts: one row per arc, one column per
// vertex.  Non-loop arc e: 1 at the source, -t(rotation part of the gain) at
// the target.  Loop at v: 1 - t(rotation part).  Exact-mode graphs only.
CycloMatrix build_m_exact(const GainGraph& g);
// Same with one extra final column holding -c(translation part of the gain).
CycloMatrix build_ml_exact(const GainGraph& g);

// Complex-double versions; accept numeric-mode graphs as well.
Eigen::MatrixXcd build_m(const GainGraph& g);
Eigen::MatrixXcd build_ml(const GainGraph& g);

struct RankEstimate {
  int rank = 0;
  int trials = 1;
  double tol = kDefaultRankTol;
  double smallest_kept = 0.0;  // smallest singular value counted toward rank
  double largest_cut = 0.0;    // largest singular value below the cut
};

RankEstimate numeric_rank(const Eigen::MatrixXd& m, double tol = kDefaultRankTol);
RankEstimate numeric_rank(const Eigen::MatrixXcd& m, double tol = kDefaultRankTol);

// Deterministic uniform samples in [-1, 1), identical across platforms.
class UniformSampler {
 public:
  explicit UniformSampler(unsigned long long seed) : state_(seed) {}
  double next();

 private:
  unsigned long long state_;
};

// Squared arc lengths of the orbit map at configuration p (x0,y0,x1,y1,...):
// for arc e = (u -> v) with gain (tau, R), the value |p_u - R p_v - tau|^2.
Eigen::VectorXd orbit_lengths(const GainGraph& g, const Eigen::VectorXd& p);

// Analytic Jacobian of orbit_lengths: |A| x 2n, real.
Eigen::MatrixXd orbit_jacobian(const GainGraph& g, const Eigen::VectorXd& p);

// Max rank of the orbit Jacobian over `trials` random configurations,
// deterministic given the seed.  Rank of the row subset `s`.
RankEstimate generic_rank(const GainGraph& g, ArcSet s,
                          int trials = kDefaultRankTrials,
                          double tol = kDefaultRankTol,
                          unsigned long long seed = 1);
RankEstimate generic_rank(const GainGraph& g,
                          int trials = kDefaultRankTrials,
                          double tol = kDefaultRankTol,
                          unsigned long long seed = 1);

// An affine space given as the image of an affine map x -> map.x + offset.
struct AffineSpace {
  Eigen::MatrixXcd map;
  Eigen::VectorXcd offset;
};

// Numeric rank of the Jacobian of (x, y) -> pi_s((A_U x + b_U) .* (A_V y + b_V))
// at random complex points; coordinatewise product, rows restricted to s.
RankEstimate hadamard_rank(const AffineSpace& u, const AffineSpace& v,
                           Bitset64 coords, int trials = kDefaultRankTrials,
                           double tol = kDefaultRankTol,
                           unsigned long long seed = 1);

// The two affine spaces whose coordinatewise product carries the orbit map of
// an exact gain graph: per arc e = (u -> v, (tau, R)),
//   U side: q_u - t(R) q_v - c(tau)     (holomorphic coordinates)
//   V side: conjugate counterpart.
std::pair<AffineSpace, AffineSpace> ml_affine_space(const GainGraph& g);

// d-fold coordinatewise product probe: numeric rank of the product Jacobian
// vs the rank of s in the matroid induced by sum of row-matroid ranks minus
// d - 1.  Reported, never asserted.
struct ProbeRecord {
  int d = 0;
  Bitset64 coords = 0;
  int numeric = 0;
  int combinatorial = 0;
  bool agree = false;
};
ProbeRecord conjecture_probe(const std::vector<Eigen::MatrixXcd>& spaces,
                             Bitset64 coords,
                             int trials = kDefaultRankTrials,
                             double tol = kDefaultRankTol,
                             unsigned long long seed = 1);

// Finite fragment of the covering framework of an exact gain graph: vertices
// are (group element, vertex) pairs for every element of the gain group whose
// translation length stays within the bound; edges join (s, u) to
// (s * gain(e), v) per arc.  Coordinates come from a seeded generic placement
// of the base vertices pushed forward by each element.
struct Framework {
  std::vector<std::string> labels;       // "g<elt>:<vertex>", plain id when trivial
  std::vector<int> element_index;        // group element per covering vertex
  std::vector<int> base_vertex;          // base vertex per covering vertex
  std::vector<std::array<double, 2>> coords;
  std::vector<std::pair<int, int>> edges;
};
Framework expand_covering(const GainGraph& g, double translation_bound,
                          unsigned long long seed = 1, int max_elements = 512);

}  // namespace symrig
