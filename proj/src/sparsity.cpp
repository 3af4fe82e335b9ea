#include "symrig/sparsity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace symrig {

// --------------------------------------------------------------------------
// (2,3) pebble game
// --------------------------------------------------------------------------

PebbleGame23::PebbleGame23(int vertex_count)
    : n_(vertex_count), pebbles_(static_cast<std::size_t>(vertex_count), 2),
      out_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

// Depth-first search for a free pebble reachable from `root` along the
// current orientation; the path to it is reversed and the pebble moved onto
// `root`.  Pebbles sitting on `root` or `other` are off limits: they are
// already counted toward the insertion quota.
bool PebbleGame23::pull_pebble(int root, int other) {
  std::vector<int> parent(static_cast<std::size_t>(n_), -1);
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  seen[static_cast<std::size_t>(root)] = 1;
  seen[static_cast<std::size_t>(other)] = 1;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const int y : out_[static_cast<std::size_t>(x)]) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      parent[static_cast<std::size_t>(y)] = x;
      if (pebbles_[static_cast<std::size_t>(y)] > 0) {
        --pebbles_[static_cast<std::size_t>(y)];
        ++pebbles_[static_cast<std::size_t>(root)];
        for (int w = y; w != root;) {
          const int p = parent[static_cast<std::size_t>(w)];
          auto& from_p = out_[static_cast<std::size_t>(p)];
          from_p.erase(std::find(from_p.begin(), from_p.end(), w));
          out_[static_cast<std::size_t>(w)].push_back(p);
          w = p;
        }
        return true;
      }
      stack.push_back(y);
    }
  }
  return false;
}

bool PebbleGame23::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) {
    throw std::invalid_argument("pebble game: bad edge");
  }
  while (pebbles_[static_cast<std::size_t>(u)] +
             pebbles_[static_cast<std::size_t>(v)] < 4) {
    if (!pull_pebble(u, v) && !pull_pebble(v, u)) return false;
  }
  --pebbles_[static_cast<std::size_t>(u)];
  out_[static_cast<std::size_t>(u)].push_back(v);
  return true;
}

std::vector<char> PebbleGame23::reachable(int u, int v) const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{u, v};
  seen[static_cast<std::size_t>(u)] = 1;
  seen[static_cast<std::size_t>(v)] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const int y : out_[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

// --------------------------------------------------------------------------
// Count route for plain graphs
// --------------------------------------------------------------------------

bool laman_count_ok(const SimpleGraph& g) {
  if (g.vertex_count > 20) {
    throw LimitExceeded("laman_count_ok: more than 20 vertices");
  }
  const Bitset64 all = full_mask(g.vertex_count);
  for (Bitset64 vs = 0; vs <= all && all != 0; ++vs) {
    const int nv = popcount(vs);
    if (nv < 2) continue;
    int induced = 0;
    for (const auto& [u, v] : g.edges) {
      if (test_bit(vs, u) && test_bit(vs, v)) ++induced;
    }
    if (induced > 2 * nv - 3) return false;
    if (vs == all) break;  // avoid wrap when vertex_count == 64
  }
  return true;
}

RigidityReport laman_decide(const SimpleGraph& g) {
  const int n = g.vertex_count;
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (g.edges.size() > 64) {
    throw std::invalid_argument("laman_decide: more than 64 edges");
  }
  std::set<std::pair<int, int>> seen_pairs;
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop in simple graph");
    if (!seen_pairs.emplace(std::min(u, v), std::max(u, v)).second) {
      throw std::invalid_argument("parallel edge in simple graph");
    }
  }

  RigidityReport rep;
  rep.group_alpha = 3;  // trivial symmetry group
  rep.target_rank = n >= 2 ? 2 * n - 3 : 0;

  PebbleGame23 game(n);
  std::vector<char> accepted(g.edges.size(), 0);
  int first_reject = -1;
  int rank = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& [u, v] = g.edges[i];
    if (game.add_edge(u, v)) {
      accepted[i] = 1;
      ++rank;
    } else if (first_reject < 0) {
      first_reject = static_cast<int>(i);
      const std::vector<char> region = game.reachable(u, v);
      ArcSet w = bit(static_cast<int>(i));
      for (std::size_t j = 0; j < g.edges.size(); ++j) {
        if (!accepted[j]) continue;
        const auto& [a, b] = g.edges[j];
        if (region[static_cast<std::size_t>(a)] &&
            region[static_cast<std::size_t>(b)]) {
          w |= bit(static_cast<int>(j));
        }
      }
      rep.witness = w;
    }
  }

  rep.independent = first_reject < 0;
  rep.rank = rank;
  rep.spanning = rep.rank == rep.target_rank;
  rep.minimally_rigid = rep.independent && rep.spanning;

  // Self-check against the exhaustive vertex-subset count on small inputs.
  if (n <= 12 && rep.independent != laman_count_ok(g)) {
    throw std::logic_error("pebble game disagrees with the subset count");
  }
  return rep;
}

// --------------------------------------------------------------------------
// Memoized per-subset quantities for gain graphs
// --------------------------------------------------------------------------

GainCounts::GainCounts(const GainGraph& g, int max_subset_arcs)
    : g_(&g), cap_(max_subset_arcs) {}

int GainCounts::alpha(ArcSet s) {
  auto it = alpha_memo_.find(s);
  if (it != alpha_memo_.end()) return it->second;
  const int a = symrig::alpha(*g_, s, cap_);
  alpha_memo_.emplace(s, a);
  return a;
}

int GainCounts::frame_rank_rot(ArcSet s) {
  auto it = frame_memo_.find(s);
  if (it != frame_memo_.end()) return it->second;
  const int r = frame_rank(*g_, s, /*rotation_only=*/true, cap_);
  frame_memo_.emplace(s, r);
  return r;
}

bool GainCounts::lift_balanced(ArcSet s) {
  auto it = lift_memo_.find(s);
  if (it != lift_memo_.end()) return it->second != 0;
  const bool b = is_lift_balanced(*g_, s, cap_);
  lift_memo_.emplace(s, b ? 1 : 0);
  return b;
}

long long GainCounts::f_value(ArcSet s) {
  return 2LL * frame_rank_rot(s) - (lift_balanced(s) ? 1 : 0);
}

bool GainCounts::count_independent(ArcSet s, ArcSet* violator) {
  if (popcount(s) > cap_) {
    throw LimitExceeded("count_independent: subset of " +
                        std::to_string(popcount(s)) +
                        " arcs exceeds cap " + std::to_string(cap_));
  }
  bool ok = true;
  for_each_submask_ascending(s, [&](ArcSet t) {
    if (!ok || t == 0) return;
    if (arc_components(*g_, t).size() != 1) return;  // connected suffices
    const int bound = 2 * incident_vertex_count(*g_, t) - alpha(t);
    if (popcount(t) > bound) {
      ok = false;
      if (violator != nullptr) *violator = t;
    }
  });
  return ok;
}

int GainCounts::count_rank(ArcSet s) {
  return greedy_rank(g_->arc_count(),
                     [&](Subset t) { return count_independent(t); }, s);
}

// --------------------------------------------------------------------------
// Free helpers
// --------------------------------------------------------------------------

long long f_value(const GainGraph& g, ArcSet s, int max_subset_arcs) {
  GainCounts counts(g, max_subset_arcs);
  return counts.f_value(s);
}

bool gain_independent(const GainGraph& g, ArcSet s, int max_subset_arcs) {
  GainCounts counts(g, max_subset_arcs);
  return counts.count_independent(s);
}

int gain_rank(const GainGraph& g, ArcSet s, int max_subset_arcs) {
  GainCounts counts(g, max_subset_arcs);
  return counts.count_rank(s);
}

// --------------------------------------------------------------------------
// Deciders
// --------------------------------------------------------------------------

namespace {

// First nonempty subset of `all` (ascending mask order) breaking the
// set-function bound; 0 when none does.
ArcSet first_f_violator(GainCounts& counts, ArcSet all) {
  ArcSet found = 0;
  for_each_submask_ascending(all, [&](ArcSet t) {
    if (found != 0 || t == 0) return;
    if (popcount(t) > counts.f_value(t)) found = t;
  });
  return found;
}

}  // namespace

RigidityReport decide(const GainGraph& g, int max_subset_arcs) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("decide: graph has no vertices");

  RigidityReport rep;
  rep.exact = g.exact();
  if (!rep.exact) rep.flags.push_back("inexact-gains");
  rep.group_alpha = group_alpha(g);
  rep.target_rank = 2 * n - rep.group_alpha;

  GainCounts counts(g, max_subset_arcs);
  const ArcSet all = g.all_arcs();

  if (n == 1) {
    // The count theorem needs two vertices; fall back to the set-function
    // matroid of the lifted counts.
    rep.flags.push_back("n1-extrapolation");
    if (popcount(all) > max_subset_arcs) {
      throw LimitExceeded("decide: too many arcs for the subset scan");
    }
    const ArcSet viol = first_f_violator(counts, all);
    rep.independent = viol == 0;
    if (!rep.independent) rep.witness = viol;
    rep.rank = greedy_rank(
        g.arc_count(),
        [&](Subset t) { return first_f_violator(counts, t) == 0; }, all);
  } else {
    ArcSet viol = 0;
    rep.independent = counts.count_independent(all, &viol);
    if (!rep.independent) rep.witness = viol;
    rep.rank = rep.independent ? g.arc_count() : counts.count_rank(all);
  }

  rep.spanning = rep.rank == rep.target_rank;
  rep.minimally_rigid = rep.independent && rep.spanning;
  return rep;
}

RigidityReport cyclic_decide(const GainGraph& g, int max_subset_arcs) {
  if (!g.exact()) {
    throw std::invalid_argument("cyclic_decide: requires exact gains");
  }
  for (const Arc& a : g.arcs()) {
    if (!a.gain.translation().is_zero()) {
      throw std::invalid_argument(
          "cyclic_decide: gains must be pure rotations");
    }
  }
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("cyclic_decide: graph has no vertices");

  RigidityReport rep;
  rep.exact = true;
  rep.group_alpha = group_alpha(g);
  rep.target_rank = 2 * n - rep.group_alpha;

  GainCounts counts(g, max_subset_arcs);
  const ArcSet all = g.all_arcs();
  if (popcount(all) > max_subset_arcs) {
    throw LimitExceeded("cyclic_decide: too many arcs for the subset scan");
  }

  // Independence in the matroid induced by twice the frame rank minus one.
  const auto fr_indep = [&](Subset t) {
    bool ok = true;
    for_each_submask_ascending(t, [&](ArcSet u) {
      if (!ok || u == 0) return;
      if (popcount(u) > 2LL * counts.frame_rank_rot(u) - 1) ok = false;
    });
    return ok;
  };

  ArcSet viol = 0;
  for_each_submask_ascending(all, [&](ArcSet u) {
    if (viol != 0 || u == 0) return;
    if (popcount(u) > 2LL * counts.frame_rank_rot(u) - 1) viol = u;
  });
  rep.independent = viol == 0;
  if (!rep.independent) rep.witness = viol;
  rep.rank = rep.independent ? g.arc_count()
                             : greedy_rank(g.arc_count(), fr_indep, all);
  rep.spanning = rep.rank == rep.target_rank;
  rep.minimally_rigid = rep.independent && rep.spanning;
  return rep;
}

}  // namespace symrig
