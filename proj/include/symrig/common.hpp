#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace symrig {

// Ground sets throughout the library (arcs of a gain graph, elements of a
// matroid) are indexed 0..63 and subsets are packed into a 64-bit mask.
// Anything larger is rejected up front: every decision procedure here is
// exponential in the subset size by design, so 64 is already far beyond what
// the enumeration caps allow.
using Bitset64 = std::uint64_t;

inline int popcount(Bitset64 s) { return std::popcount(s); }
inline bool test_bit(Bitset64 s, int i) { return (s >> i) & Bitset64{1}; }
inline Bitset64 bit(int i) { return Bitset64{1} << i; }
inline Bitset64 full_mask(int n) {
  return n >= 64 ? ~Bitset64{0} : (Bitset64{1} << n) - 1;
}
inline int lowest_bit(Bitset64 s) { return std::countr_zero(s); }

// Visit set elements in ascending order.
template <typename F>
void for_each_bit(Bitset64 s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

// Visit every submask of s (including 0 and s itself) in ascending numeric
// order.  The update (t - s) & s steps to the next-larger submask.
template <typename F>
void for_each_submask_ascending(Bitset64 s, F&& f) {
  Bitset64 t = 0;
  while (true) {
    f(t);
    t = (t - s) & s;
    if (t == 0) break;
  }
}

// A deliberately small enumeration budget: subsets analysed exhaustively may
// hold at most this many arcs/elements unless the caller raises the cap.
inline constexpr int kDefaultSubsetCap = 20;

// Raised when an exhaustive enumeration would exceed its configured cap.
struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on malformed input files or field values.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if a and b were already in the same class.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace symrig
