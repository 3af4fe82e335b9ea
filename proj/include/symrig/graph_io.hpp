#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/numeric_oracle.hpp"
#include "symrig/sparsity.hpp"

namespace symrig {

// ---------------------------------------------------------------------------
// File formats and report assembly for the command-line front end.
//
// Gain-graph files are JSON documents:
//   {
//     "group": { "rotation_order": 4, "mode": "exact" },
//     "vertices": ["v1", "v2"],
//     "arcs": [
//       { "from": "v1", "to": "v1", "rot": 1, "trans": ["1", "1/2"] },
//       ...
//     ]
//   }
// Exact arcs carry an integer rotation exponent `rot` in [0, rotation_order)
// and rational-string translation coordinates; numeric-mode arcs instead
// carry `angle` (radians) and float translations.  Both `rot`/`angle` and
// `trans` may be omitted and default to the identity contribution.
// ---------------------------------------------------------------------------

struct NamedGainGraph {
  std::vector<std::string> vertex_ids;
  GainGraph graph;
};

NamedGainGraph parse_graph_json(const nlohmann::json& doc);
NamedGainGraph parse_graph_file(const std::string& path);
nlohmann::json serialize_graph(const NamedGainGraph& g);

// Edge lists for plain graphs: one "u v" pair per line, '#' comments,
// vertices are arbitrary tokens collected in order of first appearance.
struct NamedSimpleGraph {
  std::vector<std::string> vertex_ids;
  SimpleGraph graph;
};
NamedSimpleGraph parse_edge_list(const std::string& path);

// Numeric cross-check summary attached to reports.
struct NumericCheck {
  bool ran = false;
  int combinatorial_rank = 0;
  int numeric_rank = 0;
  bool agree = true;
  unsigned long long seed = 1;
  int trials = kDefaultRankTrials;
  double tol = kDefaultRankTol;
};

inline constexpr int kReportSchemaVersion = 1;

// Structured report: schema version, verdict block, witness arc list (with
// endpoint names when available), optional numeric block.
nlohmann::json rigidity_report_json(const std::string& command,
                                    const RigidityReport& rep,
                                    const std::vector<std::string>* vertex_ids,
                                    const GainGraph* graph,
                                    const std::vector<std::pair<int, int>>* edges,
                                    const NumericCheck* numeric);

nlohmann::json framework_json(const Framework& fw,
                              const std::vector<std::string>& vertex_ids);

}  // namespace symrig
