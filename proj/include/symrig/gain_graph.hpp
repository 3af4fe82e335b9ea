#pragma once

#include <utility>
#include <vector>

#include "symrig/common.hpp"
#include "symrig/isometry.hpp"

namespace symrig {

// ---------------------------------------------------------------------------
// Gain graphs: directed multigraphs whose arcs carry plane isometries.
// Reversing an arc inverts its gain, so the combinatorial quantities below
// (balance, the Dutch property, alpha, frame rank) are invariant under the
// choice of arc orientations.
//
// Everything is desk-scale: at most 64 arcs per graph, and every enumeration
// over arc subsets is guarded by an explicit cap (default kDefaultSubsetCap).
// ---------------------------------------------------------------------------

using ArcSet = Bitset64;

struct Arc {
  int from = 0;
  int to = 0;
  Isometry gain;
  bool is_loop() const { return from == to; }
};

class GainGraph {
 public:
  // Validates: endpoints in range, at most 64 arcs, uniform mode, exact gains
  // matching the declared rotation order, and no identity-gain loops (a loop
  // whose gain is the identity would be a degenerate self-bar).
  GainGraph(int vertex_count, std::vector<Arc> arcs, unsigned rotation_order,
            bool exact_mode);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int i) const { return arcs_.at(i); }
  unsigned rotation_order() const { return rotation_order_; }
  bool exact() const { return exact_; }
  ArcSet all_arcs() const { return full_mask(arc_count()); }
  Isometry identity_gain() const;

  // Same graph with a single arc flipped and its gain inverted.
  GainGraph with_arc_reversed(int arc_index) const;

 private:
  int n_;
  std::vector<Arc> arcs_;
  unsigned rotation_order_;
  bool exact_;
};

// --- walks ------------------------------------------------------------------

struct WalkStep {
  int arc = -1;
  bool forward = true;
};

struct Walk {
  int start = -1;
  std::vector<WalkStep> steps;
};

bool walk_valid(const GainGraph& g, const Walk& w);
bool walk_closed(const GainGraph& g, const Walk& w);
// Vertex sequence visited, length steps+1 (requires a valid walk).
std::vector<int> walk_vertices(const GainGraph& g, const Walk& w);
ArcSet walk_arcs(const Walk& w);
Walk reversed_walk(const GainGraph& g, const Walk& w);
// Re-base a closed walk at a vertex it visits.
Walk rotated_to(const GainGraph& g, const Walk& w, int vertex);

// Ordered product of the arc gains, inverting arcs traversed backwards.
// Throws std::invalid_argument on an invalid walk.
Isometry walk_gain(const GainGraph& g, const Walk& w);

// Closed walk with identity gain.  Independent of basepoint and direction.
bool is_balanced(const GainGraph& g, const Walk& cycle, double tol = kEqTol);
// Same, but only the rotation component has to be trivial.
bool is_rotation_balanced(const GainGraph& g, const Walk& cycle,
                          double tol = kEqTol);

// --- cycles and bicyclic subgraphs -------------------------------------------

// All simple cycles (including loops and 2-cycles from parallel arcs) whose
// arcs lie in s, each listed exactly once up to rotation and reversal.
std::vector<Walk> simple_cycles(const GainGraph& g, ArcSet s,
                                int max_arcs = kDefaultSubsetCap);

// A set of arcs forms a bicyclic subgraph when it is connected, has exactly
// one more arc than incident vertices, and every incident vertex has degree
// at least two (loops count twice): exactly the subdivisions of a figure-8,
// of a dumbbell, and of a theta graph.
bool is_bicyclic(const GainGraph& g, ArcSet s);
std::vector<ArcSet> bicyclic_subgraphs(const GainGraph& g, ArcSet s,
                                       int max_arcs = kDefaultSubsetCap);

// A covering pair for a bicyclic subgraph: two closed walks from a common
// basepoint that together traverse every arc of the subgraph once or twice.
std::pair<Walk, Walk> covering_pair(const GainGraph& g, ArcSet bicyclic);

// The bicyclic subgraph is Dutch when the gains of a covering pair commute
// (any covering pair gives the same answer).
bool is_dutch(const GainGraph& g, ArcSet bicyclic, double tol = kEqTol);

// --- invariants ---------------------------------------------------------------

// Degree-of-freedom class of an arc set:
//   3  every cycle balanced,
//   2  not all balanced but every cycle gain a translation,
//   1  some rotation gain but every bicyclic subgraph Dutch,
//   0  otherwise.
int alpha(const GainGraph& g, ArcSet s, int max_arcs = kDefaultSubsetCap);

// Same classification applied to the group generated by all arc gains:
// 3 trivial, 2 nontrivial translation group, 1 Abelian with a rotation
// (equivalently a rotation group), 0 non-Abelian.  A generated group is
// Abelian iff its generators pairwise commute.
int group_alpha(const GainGraph& g);

// Partition of s into connected components (by shared endpoints).
std::vector<ArcSet> arc_components(const GainGraph& g, ArcSet s);
int incident_vertex_count(const GainGraph& g, ArcSet s);

// Frame-matroid rank: sum over components of (#incident vertices) minus one
// for every component in which all cycles are balanced.  With rotation_only
// the balance test ignores translation components.
int frame_rank(const GainGraph& g, ArcSet s, bool rotation_only,
               int max_arcs = kDefaultSubsetCap);

// Every frame-matroid circuit (over the rotation components of the gains)
// contained in s is "good": rotation-balanced cycles must be fully balanced,
// and bicyclic subgraphs without a rotation-balanced cycle must be Dutch.
bool is_lift_balanced(const GainGraph& g, ArcSet s,
                      int max_arcs = kDefaultSubsetCap);

}  // namespace symrig
