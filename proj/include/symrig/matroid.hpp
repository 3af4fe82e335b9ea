#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "symrig/common.hpp"

namespace symrig {

// ---------------------------------------------------------------------------
// Matroids presented by rank oracles over small ground sets (bitmask
// subsets).  Deliberately exhaustive: the ground sets come from desk-scale
// graphs and the point of this module is to be an unimpeachable reference,
// not to be fast.
// ---------------------------------------------------------------------------

using Subset = Bitset64;

class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual int ground_size() const = 0;
  virtual int rank(Subset s) const = 0;
  bool independent(Subset s) const { return rank(s) == popcount(s); }
  Subset ground() const { return full_mask(ground_size()); }
};

// Cycle matroid of a multigraph; rank(S) = #incident vertices - #components.
// Self-loop edges are matroid loops.
class GraphicMatroid final : public RankOracle {
 public:
  GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges);
  int ground_size() const override { return static_cast<int>(edges_.size()); }
  int rank(Subset s) const override;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

class UniformMatroid final : public RankOracle {
 public:
  UniformMatroid(int rank, int ground_size);
  int ground_size() const override { return ground_; }
  int rank(Subset s) const override;

 private:
  int rank_;
  int ground_;
};

// Integer set function; builds a matroid through the independence rule
//   I independent  iff  |I'| <= f(I') for every nonempty I' of I.
struct SubmodularFn {
  int ground = 0;
  std::function<long long(Subset)> value;
};

// Exhaustively checks monotonicity and submodularity (which together bound f
// by f(ground)).  Throws std::invalid_argument on a violation, LimitExceeded
// when the ground set is too large to check exhaustively.
void validate_submodular(const SubmodularFn& f, int max_check = 12);

bool edmonds_independent(const SubmodularFn& f, Subset independent_candidate,
                         int max_elements = kDefaultSubsetCap);

// Greedy maximum independent subset of s; exact for matroid independence.
int greedy_rank(int ground_size, const std::function<bool(Subset)>& indep,
                Subset s);

class EdmondsMatroid final : public RankOracle {
 public:
  explicit EdmondsMatroid(SubmodularFn f) : f_(std::move(f)) {}
  int ground_size() const override { return f_.ground; }
  int rank(Subset s) const override;

 private:
  SubmodularFn f_;
};

// I is independent in the union of two matroids when it splits into a part
// independent in each; checked over all 2^|I| splits.
bool union_independent(const RankOracle& m1, const RankOracle& m2, Subset I,
                       int max_elements = kDefaultSubsetCap);

class UnionMatroid final : public RankOracle {
 public:
  UnionMatroid(const RankOracle& m1, const RankOracle& m2);
  int ground_size() const override;
  int rank(Subset s) const override;

 private:
  const RankOracle* m1_;
  const RankOracle* m2_;
};

// Elements whose addition does not raise the rank of s.
Subset closure(const RankOracle& m, Subset s);

// All nonempty flats (closure-fixed sets), ascending by size.
std::vector<Subset> matroid_flats(const RankOracle& m, int max_ground = 10);

// A flag is a nonempty chain of nested nonempty flats, listed ascending.
using Flag = std::vector<Subset>;
std::vector<Flag> enumerate_flags(const RankOracle& m, int max_ground = 10);

// Bipartite multigraph on two flags: one edge per covered element of s,
// joining the minimal flat of each flag that contains the element.
struct HGraph {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> uncovered;  // elements of s missing from either flag
};
HGraph h_graph(const Flag& fl1, const Flag& fl2, Subset s);
bool is_forest(const HGraph& h);

// Independence of s in the matroid induced by f = rank_m + rank_n - 1,
// via the set-function route...
bool sum_minus_one_independent_edmonds(const RankOracle& m,
                                       const RankOracle& n, Subset s);
// ...and via the flag route: s is independent iff some pair of flags (one
// per matroid, each covering s) yields a cycle-free H-graph.  Requires
// loopless matroids; flag pairs that do not cover s are skipped.
bool sum_minus_one_independent_flags(const RankOracle& m, const RankOracle& n,
                                     Subset s, int max_ground = 10);
// Same search over caller-supplied flag lists (reused across many subsets).
bool sum_minus_one_independent_flags(const std::vector<Flag>& m_flags,
                                     const std::vector<Flag>& n_flags,
                                     Subset s);

// Rank in an elementary lift: rank_m(s) when s is balanced, else one more.
int lift_rank(const RankOracle& m, const std::function<bool(Subset)>& balanced,
              Subset s);

class LiftedMatroid final : public RankOracle {
 public:
  LiftedMatroid(const RankOracle& base, std::function<bool(Subset)> balanced)
      : base_(&base), balanced_(std::move(balanced)) {}
  int ground_size() const override { return base_->ground_size(); }
  int rank(Subset s) const override { return lift_rank(*base_, balanced_, s); }

 private:
  const RankOracle* base_;
  std::function<bool(Subset)> balanced_;
};

}  // namespace symrig
