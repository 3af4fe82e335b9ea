#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symrig/common.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/matroid.hpp"

namespace symrig {

// ---------------------------------------------------------------------------
// Combinatorial rigidity deciders: the classical planar count for plain
// graphs, and the gain-graph counts for frameworks forced to be symmetric.
// ---------------------------------------------------------------------------

struct RigidityReport {
  bool independent = false;   // every counted subset within its bound
  int rank = 0;               // size of a maximum independent arc subset
  int target_rank = 0;        // rank required of a spanning (rigid) graph
  bool spanning = false;      // rank == target_rank
  bool minimally_rigid = false;
  int group_alpha = -1;       // class of the gain group (3/2/1/0)
  std::optional<ArcSet> witness;  // first violating subset when dependent
  bool exact = true;          // false when gains carry floating-point data
  std::vector<std::string> flags;
};

// --------------------------------------------------------------------------
// Plain graphs: (2,3)-sparsity via the pebble game
// --------------------------------------------------------------------------

struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// (2,3) pebble game: two pebbles per vertex, an edge needs four pebbles on
// its endpoints to be inserted.  Accepted edges are exactly an independent
// set of the generic planar rigidity matroid.
class PebbleGame23 {
 public:
  explicit PebbleGame23(int vertex_count);
  // Tries to insert the edge; returns false when it is rejected (dependent).
  bool add_edge(int u, int v);
  // Vertices reachable from {u, v} along the current orientation; after a
  // rejection of (u, v) this region carries exactly 2|W| - 3 edges.
  std::vector<char> reachable(int u, int v) const;

 private:
  bool pull_pebble(int root, int other);
  int n_;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

// True when every vertex subset with >= 2 vertices induces at most
// 2|V'| - 3 edges.  Exhaustive over vertex subsets; vertex_count <= 20.
bool laman_count_ok(const SimpleGraph& g);

// Decides generic minimal rigidity of a simple graph in the plane.  The
// witness (when dependent) is the edge set of the overloaded region plus the
// rejected edge, which together number 2|W| - 2.
RigidityReport laman_decide(const SimpleGraph& g);

// --------------------------------------------------------------------------
// Gain graphs: forced-symmetric counts
// --------------------------------------------------------------------------

// Memoizing evaluator for the per-subset quantities the deciders consume.
class GainCounts {
 public:
  explicit GainCounts(const GainGraph& g, int max_subset_arcs = kDefaultSubsetCap);

  int alpha(ArcSet s);            // cycle-content class of the subgraph
  int frame_rank_rot(ArcSet s);   // frame-matroid rank of the rotation parts
  bool lift_balanced(ArcSet s);   // no rank-raising circuit content
  long long f_value(ArcSet s);    // 2 * frame_rank_rot - [lift_balanced]

  // Count route: |F| <= 2|V(F)| - alpha(F) for every nonempty connected
  // subset F of s.  Returns the first violator in ascending mask order.
  bool count_independent(ArcSet s, ArcSet* violator = nullptr);
  int count_rank(ArcSet s);

  const GainGraph& graph() const { return *g_; }

 private:
  const GainGraph* g_;
  int cap_;
  std::unordered_map<ArcSet, int> alpha_memo_;
  std::unordered_map<ArcSet, int> frame_memo_;
  std::unordered_map<ArcSet, char> lift_memo_;
};

// Value of the lifted count function on a subset: 2 * (rotation-part frame
// rank) minus one when the subset carries no rank-raising circuit content.
// f(empty) = -1 by the same formula; deciders never evaluate it.
long long f_value(const GainGraph& g, ArcSet s,
                  int max_subset_arcs = kDefaultSubsetCap);

// Independence / rank through the connected-subset count route.
bool gain_independent(const GainGraph& g, ArcSet s,
                      int max_subset_arcs = kDefaultSubsetCap);
int gain_rank(const GainGraph& g, ArcSet s,
              int max_subset_arcs = kDefaultSubsetCap);

// Decides forced-symmetric minimal rigidity of a gain graph over a group of
// plane rotations and translations.  Requires at least two vertices for the
// count theorem; a one-vertex graph falls back to the set-function matroid
// and is flagged "n1-extrapolation".  Numeric-mode graphs are decided with
// tolerance-based classification and flagged "inexact-gains".
RigidityReport decide(const GainGraph& g,
                      int max_subset_arcs = kDefaultSubsetCap);

// Same decision, independently derived for pure rotation groups: Edmonds
// independence over f(F) = 2 * frame_rank(F) - 1.  Throws
// std::invalid_argument when some gain carries a translation or the graph is
// numeric.  Must agree with decide() on its domain.
RigidityReport cyclic_decide(const GainGraph& g,
                             int max_subset_arcs = kDefaultSubsetCap);

}  // namespace symrig
