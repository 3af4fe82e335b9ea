#include "symrig/gain_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace symrig {

namespace {

void check_cap(ArcSet s, int max_arcs, const char* what) {
  if (popcount(s) > max_arcs)
    throw LimitExceeded(std::string(what) + ": subset of " +
                        std::to_string(popcount(s)) +
                        " arcs exceeds the enumeration cap of " +
                        std::to_string(max_arcs));
}

}  // namespace

GainGraph::GainGraph(int vertex_count, std::vector<Arc> arcs,
                     unsigned rotation_order, bool exact_mode)
    : n_(vertex_count),
      arcs_(std::move(arcs)),
      rotation_order_(rotation_order),
      exact_(exact_mode) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  if (rotation_order_ == 0)
    throw std::invalid_argument("rotation order must be positive");
  if (arcs_.size() > 64)
    throw std::invalid_argument("gain graphs are limited to 64 arcs");
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
      throw std::invalid_argument("arc endpoint out of range");
    if (a.gain.is_exact() != exact_)
      throw std::invalid_argument("arc gain mode does not match the graph mode");
    if (exact_ && a.gain.rotation_order() != rotation_order_)
      throw std::invalid_argument(
          "arc gain rotation order does not match the declared group order");
    if (a.is_loop() && a.gain.is_identity())
      throw std::invalid_argument("identity-gain loops are not allowed");
  }
}

Isometry GainGraph::identity_gain() const {
  return exact_ ? Isometry::identity(rotation_order_)
                : Isometry::numeric(0.0, {0.0, 0.0});
}

GainGraph GainGraph::with_arc_reversed(int arc_index) const {
  std::vector<Arc> copy = arcs_;
  Arc& a = copy.at(arc_index);
  a = Arc{a.to, a.from, a.gain.inverse()};
  return GainGraph(n_, std::move(copy), rotation_order_, exact_);
}

// --- walks -------------------------------------------------------------------

bool walk_valid(const GainGraph& g, const Walk& w) {
  if (w.start < 0 || w.start >= g.vertex_count()) return false;
  int cur = w.start;
  for (const WalkStep& s : w.steps) {
    if (s.arc < 0 || s.arc >= g.arc_count()) return false;
    const Arc& a = g.arc(s.arc);
    const int tail = s.forward ? a.from : a.to;
    const int head = s.forward ? a.to : a.from;
    if (tail != cur) return false;
    cur = head;
  }
  return true;
}

bool walk_closed(const GainGraph& g, const Walk& w) {
  if (!walk_valid(g, w)) return false;
  const std::vector<int> verts = walk_vertices(g, w);
  return verts.front() == verts.back();
}

std::vector<int> walk_vertices(const GainGraph& g, const Walk& w) {
  if (!walk_valid(g, w)) throw std::invalid_argument("invalid walk");
  std::vector<int> verts{w.start};
  int cur = w.start;
  for (const WalkStep& s : w.steps) {
    const Arc& a = g.arc(s.arc);
    cur = s.forward ? a.to : a.from;
    verts.push_back(cur);
  }
  return verts;
}

ArcSet walk_arcs(const Walk& w) {
  ArcSet s = 0;
  for (const WalkStep& step : w.steps) s |= bit(step.arc);
  return s;
}

Walk reversed_walk(const GainGraph& g, const Walk& w) {
  const std::vector<int> verts = walk_vertices(g, w);
  Walk r;
  r.start = verts.back();
  r.steps.reserve(w.steps.size());
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
    r.steps.push_back(WalkStep{it->arc, !it->forward});
  return r;
}

Walk rotated_to(const GainGraph& g, const Walk& w, int vertex) {
  if (!walk_closed(g, w))
    throw std::invalid_argument("can only re-base a closed walk");
  const std::vector<int> verts = walk_vertices(g, w);
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    if (verts[i] != vertex) continue;
    Walk r;
    r.start = vertex;
    r.steps.insert(r.steps.end(), w.steps.begin() + i, w.steps.end());
    r.steps.insert(r.steps.end(), w.steps.begin(), w.steps.begin() + i);
    return r;
  }
  throw std::invalid_argument("walk does not visit the requested basepoint");
}

Isometry walk_gain(const GainGraph& g, const Walk& w) {
  if (!walk_valid(g, w)) throw std::invalid_argument("invalid walk");
  Isometry acc = g.identity_gain();
  for (const WalkStep& s : w.steps) {
    const Isometry& gain = g.arc(s.arc).gain;
    acc = compose(acc, s.forward ? gain : gain.inverse());
  }
  return acc;
}

bool is_balanced(const GainGraph& g, const Walk& cycle, double tol) {
  if (!walk_closed(g, cycle))
    throw std::invalid_argument("balance is defined for closed walks");
  return walk_gain(g, cycle).is_identity(tol);
}

bool is_rotation_balanced(const GainGraph& g, const Walk& cycle, double tol) {
  if (!walk_closed(g, cycle))
    throw std::invalid_argument("balance is defined for closed walks");
  return walk_gain(g, cycle).classify(tol) != IsometryKind::Rotation;
}

// --- cycles -------------------------------------------------------------------

namespace {

// Depth-first enumeration of simple paths from `cur` back to `target` using
// arcs of `s` with index strictly greater than `base` and vertices disjoint
// from everything visited so far.  Each completed path closes one simple
// cycle whose minimal arc is `base`, which makes the enumeration exact: every
// simple cycle is produced once, anchored at its smallest arc index and
// traversed in that arc's forward direction.
void dfs_paths(const GainGraph& g, ArcSet s, int base, int target, int cur,
               std::vector<bool>& visited, ArcSet used,
               std::vector<WalkStep>& path, std::vector<Walk>& out) {
  for_each_bit(s, [&](int f) {
    if (f <= base || test_bit(used, f)) return;
    const Arc& a = g.arc(f);
    for (const bool forward : {true, false}) {
      const int tail = forward ? a.from : a.to;
      const int head = forward ? a.to : a.from;
      if (tail != cur) continue;
      if (a.is_loop()) continue;  // would revisit cur
      if (head == target) {
        Walk w;
        w.start = g.arc(base).from;
        w.steps.push_back(WalkStep{base, true});
        w.steps.insert(w.steps.end(), path.begin(), path.end());
        w.steps.push_back(WalkStep{f, forward});
        out.push_back(std::move(w));
        continue;
      }
      if (visited[head]) continue;
      visited[head] = true;
      path.push_back(WalkStep{f, forward});
      dfs_paths(g, s, base, target, head, visited, used | bit(f), path, out);
      path.pop_back();
      visited[head] = false;
    }
  });
}

}  // namespace

std::vector<Walk> simple_cycles(const GainGraph& g, ArcSet s, int max_arcs) {
  check_cap(s, max_arcs, "cycle enumeration");
  std::vector<Walk> out;
  for_each_bit(s, [&](int e) {
    const Arc& a = g.arc(e);
    if (a.is_loop()) {
      Walk w;
      w.start = a.from;
      w.steps.push_back(WalkStep{e, true});
      out.push_back(std::move(w));
      return;
    }
    std::vector<bool> visited(g.vertex_count(), false);
    visited[a.from] = visited[a.to] = true;
    std::vector<WalkStep> path;
    dfs_paths(g, s, e, a.from, a.to, visited, bit(e), path, out);
  });
  return out;
}

bool is_bicyclic(const GainGraph& g, ArcSet s) {
  const int arcs = popcount(s);
  if (arcs < 2) return false;
  if (arc_components(g, s).size() != 1) return false;
  const int verts = incident_vertex_count(g, s);
  if (arcs != verts + 1) return false;
  std::vector<int> degree(g.vertex_count(), 0);
  for_each_bit(s, [&](int e) {
    degree[g.arc(e).from] += 1;
    degree[g.arc(e).to] += 1;  // loops contribute 2 in total
  });
  bool ok = true;
  for_each_bit(s, [&](int e) {
    if (degree[g.arc(e).from] < 2 || degree[g.arc(e).to] < 2) ok = false;
  });
  return ok;
}

std::vector<ArcSet> bicyclic_subgraphs(const GainGraph& g, ArcSet s,
                                       int max_arcs) {
  check_cap(s, max_arcs, "bicyclic enumeration");
  std::vector<ArcSet> out;
  for_each_submask_ascending(s, [&](ArcSet t) {
    if (is_bicyclic(g, t)) out.push_back(t);
  });
  return out;
}

std::pair<Walk, Walk> covering_pair(const GainGraph& g, ArcSet b) {
  if (!is_bicyclic(g, b))
    throw std::invalid_argument("covering pairs are defined for bicyclic subgraphs");
  const std::vector<Walk> cycles = simple_cycles(g, b);

  // Figure-8 and theta shapes: two cycles through a common vertex.
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const std::vector<int> vi = walk_vertices(g, cycles[i]);
    const std::set<int> seen(vi.begin(), vi.end());
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      for (const int v : walk_vertices(g, cycles[j])) {
        if (!seen.count(v)) continue;
        return {rotated_to(g, cycles[i], v), rotated_to(g, cycles[j], v)};
      }
    }
  }

  // Dumbbell: exactly two vertex-disjoint cycles joined by a path.  Walk the
  // second cycle conjugated by the connecting path so both walks share the
  // basepoint; the path arcs are traversed twice, everything else once.
  const Walk& c0 = cycles.at(0);
  const Walk& c1 = cycles.at(1);
  const std::vector<int> v0 = walk_vertices(g, c0);
  const std::vector<int> v1 = walk_vertices(g, c1);
  const std::set<int> start_set(v0.begin(), v0.end());
  const std::set<int> goal_set(v1.begin(), v1.end());

  // BFS over the arcs of b from the first cycle to the second.
  std::vector<int> parent_arc(g.vertex_count(), -1);
  std::vector<bool> parent_forward(g.vertex_count(), true);
  std::vector<int> parent_vertex(g.vertex_count(), -1);
  std::vector<bool> reached(g.vertex_count(), false);
  std::vector<int> queue;
  for (const int v : start_set) {
    reached[v] = true;
    queue.push_back(v);
  }
  int hit = -1;
  for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
    const int cur = queue[qi];
    for_each_bit(b, [&](int e) {
      if (hit >= 0) return;
      const Arc& a = g.arc(e);
      for (const bool forward : {true, false}) {
        const int tail = forward ? a.from : a.to;
        const int head = forward ? a.to : a.from;
        if (tail != cur || reached[head]) continue;
        reached[head] = true;
        parent_arc[head] = e;
        parent_forward[head] = forward;
        parent_vertex[head] = cur;
        if (goal_set.count(head)) {
          hit = head;
          return;
        }
        queue.push_back(head);
      }
    });
  }
  if (hit < 0) throw std::logic_error("disconnected bicyclic subgraph");

  Walk path;  // from a vertex of c0 to `hit` on c1
  std::vector<WalkStep> rev;
  int cur = hit;
  while (!start_set.count(cur)) {
    rev.push_back(WalkStep{parent_arc[cur], parent_forward[cur]});
    cur = parent_vertex[cur];
  }
  path.start = cur;
  path.steps.assign(rev.rbegin(), rev.rend());

  const Walk w1 = rotated_to(g, c0, path.start);
  Walk w2 = path;
  const Walk c1_based = rotated_to(g, c1, hit);
  w2.steps.insert(w2.steps.end(), c1_based.steps.begin(), c1_based.steps.end());
  const Walk back = reversed_walk(g, path);
  w2.steps.insert(w2.steps.end(), back.steps.begin(), back.steps.end());
  return {w1, w2};
}

bool is_dutch(const GainGraph& g, ArcSet b, double tol) {
  const auto [w1, w2] = covering_pair(g, b);
  return commutes(walk_gain(g, w1), walk_gain(g, w2), tol);
}

// --- invariants ----------------------------------------------------------------

int alpha(const GainGraph& g, ArcSet s, int max_arcs) {
  const std::vector<Walk> cycles = simple_cycles(g, s, max_arcs);
  bool all_balanced = true;
  bool all_translational = true;
  for (const Walk& c : cycles) {
    const IsometryKind kind = walk_gain(g, c).classify();
    if (kind != IsometryKind::Identity) all_balanced = false;
    if (kind == IsometryKind::Rotation) all_translational = false;
  }
  if (all_balanced) return 3;
  if (all_translational) return 2;
  for (const ArcSet b : bicyclic_subgraphs(g, s, max_arcs))
    if (!is_dutch(g, b)) return 0;
  return 1;
}

int group_alpha(const GainGraph& g) {
  bool all_identity = true;
  bool any_rotation = false;
  for (const Arc& a : g.arcs()) {
    const IsometryKind kind = a.gain.classify();
    if (kind != IsometryKind::Identity) all_identity = false;
    if (kind == IsometryKind::Rotation) any_rotation = true;
  }
  if (all_identity) return 3;
  if (!any_rotation) return 2;
  for (int i = 0; i < g.arc_count(); ++i)
    for (int j = i + 1; j < g.arc_count(); ++j)
      if (!commutes(g.arc(i).gain, g.arc(j).gain)) return 0;
  return 1;
}

std::vector<ArcSet> arc_components(const GainGraph& g, ArcSet s) {
  UnionFind uf(g.vertex_count());
  for_each_bit(s, [&](int e) { uf.unite(g.arc(e).from, g.arc(e).to); });
  std::vector<ArcSet> comps;
  std::vector<int> root_to_comp(g.vertex_count(), -1);
  for_each_bit(s, [&](int e) {
    const int r = uf.find(g.arc(e).from);
    if (root_to_comp[r] < 0) {
      root_to_comp[r] = static_cast<int>(comps.size());
      comps.push_back(0);
    }
    comps[root_to_comp[r]] |= bit(e);
  });
  return comps;
}

int incident_vertex_count(const GainGraph& g, ArcSet s) {
  std::vector<bool> seen(g.vertex_count(), false);
  int count = 0;
  for_each_bit(s, [&](int e) {
    for (const int v : {g.arc(e).from, g.arc(e).to}) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
      }
    }
  });
  return count;
}

int frame_rank(const GainGraph& g, ArcSet s, bool rotation_only, int max_arcs) {
  check_cap(s, max_arcs, "frame rank");
  int rank = 0;
  for (const ArcSet comp : arc_components(g, s)) {
    bool balanced = true;
    for (const Walk& c : simple_cycles(g, comp, max_arcs)) {
      if (rotation_only ? !is_rotation_balanced(g, c) : !is_balanced(g, c)) {
        balanced = false;
        break;
      }
    }
    rank += incident_vertex_count(g, comp) - (balanced ? 1 : 0);
  }
  return rank;
}

bool is_lift_balanced(const GainGraph& g, ArcSet s, int max_arcs) {
  const std::vector<Walk> cycles = simple_cycles(g, s, max_arcs);
  for (const Walk& c : cycles)
    if (is_rotation_balanced(g, c) && !is_balanced(g, c)) return false;
  for (const ArcSet b : bicyclic_subgraphs(g, s, max_arcs)) {
    bool has_rotation_balanced_cycle = false;
    for (const Walk& c : cycles) {
      if ((walk_arcs(c) & ~b) != 0) continue;  // cycle not inside b
      if (is_rotation_balanced(g, c)) {
        has_rotation_balanced_cycle = true;
        break;
      }
    }
    if (!has_rotation_balanced_cycle && !is_dutch(g, b)) return false;
  }
  return true;
}

}  // namespace symrig
