#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symrig/matroid.hpp"
#include "symrig/numeric_oracle.hpp"

namespace symrig {

// ---------------------------------------------------------------------------
// Verification families for the matroid laboratory: exhaustive cross-checks
// of the matroid-union identity and of the flag/H-graph independence route,
// pinned Hadamard-product ranks, and the non-gating multi-factor product
// probe.  Pure functions; each returns per-instance pass/fail results so the
// CLI can print counts and pick an exit code.
// ---------------------------------------------------------------------------

struct LabInstance {
  std::string name;
  std::shared_ptr<const RankOracle> matroid;
  bool loopless = true;
};

// Graphic matroids of the (isomorphism classes of) graphs on at most four
// vertices together with the uniform matroids U(r, k) for k <= 5, filtered
// to ground size <= max_ground.
std::vector<LabInstance> matroid_family(int max_ground = 6);

struct LabResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first mismatch when failing
};

struct LabReport {
  std::string check;
  std::vector<LabResult> results;
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

// For every same-ground pair from the family and every subset I:
// union_independent(m1, m2, I) must match the set-function quantifier for
// rank_1 + rank_2.
LabReport run_union_check(int max_ground = 5);

// For every same-ground loopless pair and every subset s: the flag/H-graph
// route must match the set-function route for rank_m + rank_n - 1.
LabReport run_hgraph_check(int max_ground = 5);

// Pinned coordinatewise-product ranks (all-ones line, triangle incidence
// spaces) plus full numeric-vs-combinatorial agreement for offset-free
// spaces with known row matroids.
LabReport run_hadamard_check(unsigned long long seed = 1);

// d-fold product probe for d in {2, 3, 4}; informational, never a gate.
struct ProbeReport {
  std::vector<std::string> names;   // parallel to records
  std::vector<ProbeRecord> records;
  int agreements = 0;
  int disagreements = 0;
};
ProbeReport run_conjecture_probe(unsigned long long seed = 1);

}  // namespace symrig
