#pragma once

// Shared test helpers: deterministic random gain-graph generators and a
// brute-force covering-pair enumerator used to verify that the Dutch verdict
// does not depend on which covering pair the library happens to pick.

#include <utility>
#include <vector>

#include "symrig/gain_graph.hpp"
#include "symrig/numeric_oracle.hpp"

namespace symrig::testsupport {

// Deterministic small-integer stream on top of the library's portable
// sampler, so test instances are identical across platforms.
class IntStream {
 public:
  explicit IntStream(unsigned long long seed) : s_(seed) {}
  // Uniform in [0, n), n >= 1.
  int next(int n) {
    const double u = (s_.next() + 1.0) / 2.0;  // [0, 1)
    int v = static_cast<int>(u * n);
    if (v >= n) v = n - 1;
    return v;
  }

 private:
  UniformSampler s_;
};

// Random exact gain graph over the rotation group of the given order: no
// translations, loops never carry the identity rotation.  Requires n >= 2
// when order == 1 (otherwise no valid loop gain exists).
inline GainGraph random_rotation_graph(unsigned long long seed, unsigned order,
                                       int n, int arc_count) {
  IntStream rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(arc_count));
  for (int i = 0; i < arc_count; ++i) {
    const int u = rng.next(n);
    int v = rng.next(n);
    long long k = rng.next(static_cast<int>(order));
    if (u == v && k == 0) {
      if (order >= 2) {
        k = 1 + rng.next(static_cast<int>(order) - 1);
      } else {
        v = (u + 1) % n;  // order 1: loops are impossible, reroute the arc
      }
    }
    arcs.push_back(Arc{u, v, Isometry::exact(order, k, Rational(0), Rational(0))});
  }
  return GainGraph(n, std::move(arcs), order, true);
}

// Random exact gain graph mixing rotations (exponent uniform in the order)
// with small rational translations (numerators in [-2, 2], denominators 1 or
// 2).  Identity loops are nudged into pure unit translations.
inline GainGraph random_mixed_graph(unsigned long long seed, unsigned order,
                                    int n, int arc_count) {
  IntStream rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(arc_count));
  for (int i = 0; i < arc_count; ++i) {
    const int u = rng.next(n);
    const int v = rng.next(n);
    const long long k = rng.next(static_cast<int>(order));
    Rational tx(rng.next(5) - 2, 1 + rng.next(2));
    const Rational ty(rng.next(5) - 2, 1 + rng.next(2));
    if (u == v && k == 0 && tx == 0 && ty == 0) tx = 1;
    arcs.push_back(Arc{u, v, Isometry::exact(order, k, tx, ty)});
  }
  return GainGraph(n, std::move(arcs), order, true);
}

// All reduced closed walks from `base` inside `sub` using each arc at most
// twice, up to the cap.  Reduced means no step immediately undoes the
// previous one (same arc, opposite direction); such backtracking contributes
// nothing to the walk gain and would only produce degenerate pairs below.
inline void closed_walks_from(const GainGraph& g, ArcSet sub, int base,
                              std::vector<Walk>& out, std::size_t max_walks) {
  Walk cur;
  cur.start = base;
  std::vector<int> usage(static_cast<std::size_t>(g.arc_count()), 0);
  // Depth-first over (current vertex, per-arc usage <= 2).
  auto dfs = [&](auto&& self, int at) -> void {
    if (out.size() >= max_walks) return;
    if (at == base && !cur.steps.empty()) out.push_back(cur);
    for_each_bit(sub, [&](int a) {
      if (out.size() >= max_walks) return;
      if (usage[static_cast<std::size_t>(a)] >= 2) return;
      const Arc& arc = g.arc(a);
      for (const bool forward : {true, false}) {
        if (!arc.is_loop() && (forward ? arc.from : arc.to) != at) continue;
        if (arc.is_loop() && arc.from != at) continue;
        if (!cur.steps.empty() && cur.steps.back().arc == a &&
            cur.steps.back().forward != forward) {
          continue;  // immediate backtrack
        }
        ++usage[static_cast<std::size_t>(a)];
        cur.steps.push_back(WalkStep{a, forward});
        self(self, forward ? arc.to : arc.from);
        cur.steps.pop_back();
        --usage[static_cast<std::size_t>(a)];
      }
    });
  };
  dfs(dfs, base);
}

// --- Free-group bookkeeping for covering pairs -----------------------------
//
// A pair of closed walks in a bicyclic subgraph determines two elements of
// its fundamental group, a free group of rank two.  The commutation test is
// only meaningful for pairs that actually generate that group: a pair such
// as (W, W^-1) or (L^2, L') commutes for trivial algebraic reasons and says
// nothing about the subgraph.  Nielsen's classical criterion decides
// generation: words (u, v) form a basis of the free group F(x, y) exactly
// when their commutator [u, v] is conjugate to [x, y] or its inverse, and
// conjugacy of cyclically reduced words is equality up to rotation.

// Appends one generator token (+/-(id+1)) with free reduction.
inline void push_token(std::vector<int>& word, int tok) {
  if (!word.empty() && word.back() == -tok) {
    word.pop_back();
  } else {
    word.push_back(tok);
  }
}

// The walk read as a freely reduced word over the non-forest arcs of `sub`
// (forest arcs are silent: they are contractible within the subgraph).
inline std::vector<int> walk_word(const Walk& w,
                                  const std::vector<int>& generator_of_arc) {
  std::vector<int> word;
  for (const WalkStep& st : w.steps) {
    const int gen = generator_of_arc[static_cast<std::size_t>(st.arc)];
    if (gen < 0) continue;
    push_token(word, st.forward ? gen + 1 : -(gen + 1));
  }
  return word;
}

inline std::vector<int> free_product(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<int> word;
  for (const int tok : a) push_token(word, tok);
  for (const int tok : b) push_token(word, tok);
  return word;
}

inline std::vector<int> free_inverse(const std::vector<int>& a) {
  std::vector<int> word(a.rbegin(), a.rend());
  for (int& tok : word) tok = -tok;
  return word;
}

inline bool cyclic_rotation_of(std::vector<int> a, const std::vector<int>& b) {
  // Cyclically reduce a (b callers pass is already cyclically reduced).
  while (a.size() >= 2 && a.front() == -a.back()) {
    a.erase(a.begin());
    a.pop_back();
  }
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = a[(i + shift) % n] == b[i];
    }
    if (match) return true;
  }
  return n == 0 && b.empty();
}

// Nielsen's criterion: (u, v) generates F(x, y) iff [u, v] ~ [x, y]^{+/-1}.
inline bool generates_rank_two(const std::vector<int>& u,
                               const std::vector<int>& v) {
  const std::vector<int> commutator = free_product(
      free_product(u, v), free_product(free_inverse(u), free_inverse(v)));
  return cyclic_rotation_of(commutator, {1, 2, -1, -2}) ||
         cyclic_rotation_of(commutator, {2, 1, -2, -1});
}

// Every covering pair of the bicyclic arc set `sub` found by brute force:
// pairs of reduced closed walks from a common basepoint that together use
// each arc of `sub` once or twice and whose words in the two fundamental
// cycles generate the free group of rank two (Nielsen's criterion above).
// The generation filter discards pairs whose commutation is forced for
// algebraic reasons independent of the gains, e.g. (W, W) or a walk around
// the square of one loop paired with the other loop.  Capped for safety;
// intended for <= 6 arcs.
inline std::vector<std::pair<Walk, Walk>> all_covering_pairs(
    const GainGraph& g, ArcSet sub, std::size_t max_walks = 4000,
    std::size_t max_pairs = 20000) {
  std::vector<std::pair<Walk, Walk>> pairs;
  std::vector<char> seen_vertex(static_cast<std::size_t>(g.vertex_count()), 0);
  for_each_bit(sub, [&](int a) {
    seen_vertex[static_cast<std::size_t>(g.arc(a).from)] = 1;
    seen_vertex[static_cast<std::size_t>(g.arc(a).to)] = 1;
  });
  // Spanning-forest presentation of the subgraph: every arc that closes a
  // cycle becomes a generator of the fundamental group.
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    parent[static_cast<std::size_t>(v)] = v;
  }
  auto root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  std::vector<int> generator_of_arc(static_cast<std::size_t>(g.arc_count()),
                                    -1);
  int generators = 0;
  for_each_bit(sub, [&](int a) {
    const int ru = root(g.arc(a).from);
    const int rv = root(g.arc(a).to);
    if (ru == rv) {
      generator_of_arc[static_cast<std::size_t>(a)] = generators++;
    } else {
      parent[static_cast<std::size_t>(ru)] = rv;
    }
  });
  const bool rank_two = generators == 2;
  for (int base = 0; base < g.vertex_count(); ++base) {
    if (!seen_vertex[static_cast<std::size_t>(base)]) continue;
    std::vector<Walk> walks;
    closed_walks_from(g, sub, base, walks, max_walks);
    std::vector<std::vector<int>> usage(walks.size());
    std::vector<std::vector<int>> words(walks.size());
    for (std::size_t i = 0; i < walks.size(); ++i) {
      usage[i].assign(static_cast<std::size_t>(g.arc_count()), 0);
      for (const WalkStep& st : walks[i].steps) {
        ++usage[i][static_cast<std::size_t>(st.arc)];
      }
      words[i] = walk_word(walks[i], generator_of_arc);
    }
    for (std::size_t i = 0; i < walks.size(); ++i) {
      for (std::size_t j = i; j < walks.size(); ++j) {
        if (pairs.size() >= max_pairs) return pairs;
        bool covering = true;
        for_each_bit(sub, [&](int a) {
          const int c = usage[i][static_cast<std::size_t>(a)] +
                        usage[j][static_cast<std::size_t>(a)];
          if (c < 1 || c > 2) covering = false;
        });
        if (!covering) continue;
        if (rank_two && !generates_rank_two(words[i], words[j])) continue;
        pairs.emplace_back(walks[i], walks[j]);
      }
    }
  }
  return pairs;
}

}  // namespace symrig::testsupport
