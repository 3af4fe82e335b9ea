// Command-line front end: parse graph files, run the deciders and numeric
// oracles, emit a JSON report on stdout and a human summary on stderr.
//
// Exit codes: 0 success; 1 input error; 2 enumeration cap exceeded;
// 3 disagreement (--strict numeric mismatch, or a failed lab cross-check).

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/graph_io.hpp"
#include "symrig/lab.hpp"
#include "symrig/numeric_oracle.hpp"
#include "symrig/sparsity.hpp"

namespace {

using nlohmann::json;
using namespace symrig;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitLimit = 2;
constexpr int kExitDisagree = 3;

struct CommonFlags {
  unsigned long long seed = 1;
  double tol = kDefaultRankTol;
  int trials = kDefaultRankTrials;
  int max_subset_arcs = kDefaultSubsetCap;
  bool strict = false;
  bool no_numeric = false;
};

void add_numeric_flags(CLI::App& cmd, CommonFlags& f) {
  cmd.add_option("--seed", f.seed, "random seed for numeric trials");
  cmd.add_option("--tol", f.tol, "relative singular-value tolerance")
      ->default_val(kDefaultRankTol);
  cmd.add_option("--trials", f.trials, "numeric rank trials (max is taken)")
      ->default_val(kDefaultRankTrials);
  cmd.add_flag("--strict", f.strict,
               "exit 3 when the numeric cross-check disagrees");
  cmd.add_flag("--no-numeric", f.no_numeric,
               "skip the floating-point cross-check");
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

std::string verdict_word(const RigidityReport& rep) {
  if (rep.minimally_rigid) return "minimally rigid";
  if (rep.spanning) return "rigid (redundant)";
  if (rep.independent) return "independent but not spanning (flexible)";
  return "dependent and not spanning (flexible)";
}

void summarize(const RigidityReport& rep, const NumericCheck& nc) {
  std::cerr << "verdict: " << verdict_word(rep) << "\n"
            << "rank: " << rep.rank << " / target " << rep.target_rank
            << " (group alpha " << rep.group_alpha << ")\n";
  if (rep.witness) {
    std::cerr << "witness: " << popcount(*rep.witness)
              << " arc(s) violating the count\n";
  }
  for (const std::string& flag : rep.flags) std::cerr << "flag: " << flag << "\n";
  if (nc.ran) {
    std::cerr << "numeric cross-check: rank " << nc.numeric_rank
              << (nc.agree ? " (agrees)" : " (DISAGREES)") << "\n";
  }
}

int finish(const RigidityReport& rep, const NumericCheck& nc, bool strict) {
  if (strict && nc.ran && !nc.agree) return kExitDisagree;
  return kExitOk;
}

int cmd_analyze(const std::string& path, const CommonFlags& f) {
  const NamedGainGraph named = parse_graph_file(path);
  const RigidityReport rep = decide(named.graph, f.max_subset_arcs);
  NumericCheck nc;
  if (!f.no_numeric) {
    const RankEstimate est =
        generic_rank(named.graph, f.trials, f.tol, f.seed);
    nc.ran = true;
    nc.combinatorial_rank = rep.rank;
    nc.numeric_rank = est.rank;
    nc.agree = est.rank == rep.rank;
    nc.seed = f.seed;
    nc.trials = f.trials;
    nc.tol = f.tol;
  }
  emit(rigidity_report_json("analyze", rep, &named.vertex_ids, &named.graph,
                            nullptr, &nc));
  summarize(rep, nc);
  return finish(rep, nc, f.strict);
}

int cmd_laman(const std::string& path, const CommonFlags& f) {
  const NamedSimpleGraph named = parse_edge_list(path);
  const RigidityReport rep = laman_decide(named.graph);
  NumericCheck nc;
  if (!f.no_numeric) {
    std::vector<Arc> arcs;
    arcs.reserve(named.graph.edges.size());
    for (const auto& [u, v] : named.graph.edges) {
      arcs.push_back(Arc{u, v, Isometry::identity(1)});
    }
    const GainGraph trivial(named.graph.vertex_count, std::move(arcs), 1, true);
    const RankEstimate est = generic_rank(trivial, f.trials, f.tol, f.seed);
    nc.ran = true;
    nc.combinatorial_rank = rep.rank;
    nc.numeric_rank = est.rank;
    nc.agree = est.rank == rep.rank;
    nc.seed = f.seed;
    nc.trials = f.trials;
    nc.tol = f.tol;
  }
  emit(rigidity_report_json("laman", rep, &named.vertex_ids, nullptr,
                            &named.graph.edges, &nc));
  summarize(rep, nc);
  return finish(rep, nc, f.strict);
}

json lab_report_json(const LabReport& rep) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = "matroid-lab";
  doc["check"] = rep.check;
  json results = json::array();
  for (const LabResult& r : rep.results) {
    json entry = {{"name", r.name}, {"pass", r.pass}};
    if (!r.detail.empty()) entry["detail"] = r.detail;
    results.push_back(std::move(entry));
  }
  doc["results"] = std::move(results);
  doc["passed"] = rep.passed;
  doc["failed"] = rep.failed;
  return doc;
}

int cmd_matroid_lab(const std::string& check, int max_ground,
                    unsigned long long seed) {
  if (check == "conjecture-probe") {
    const ProbeReport rep = run_conjecture_probe(seed);
    json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "matroid-lab";
    doc["check"] = check;
    json results = json::array();
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
      const ProbeRecord& r = rep.records[i];
      json coords = json::array();
      for_each_bit(r.coords, [&](int e) { coords.push_back(e); });
      results.push_back({{"name", rep.names[i]},
                         {"d", r.d},
                         {"coords", std::move(coords)},
                         {"numeric_rank", r.numeric},
                         {"combinatorial_rank", r.combinatorial},
                         {"agree", r.agree}});
    }
    doc["results"] = std::move(results);
    doc["agreements"] = rep.agreements;
    doc["disagreements"] = rep.disagreements;
    emit(doc);
    std::cerr << "conjecture probe: " << rep.agreements << " agreement(s), "
              << rep.disagreements
              << " disagreement(s); informational only\n";
    return kExitOk;  // the probe never gates
  }

  LabReport rep;
  if (check == "union-check") {
    rep = run_union_check(max_ground);
  } else if (check == "hgraph-check") {
    rep = run_hgraph_check(max_ground);
  } else {  // hadamard-check
    rep = run_hadamard_check(seed);
  }
  emit(lab_report_json(rep));
  std::cerr << rep.check << ": " << rep.passed << " passed, " << rep.failed
            << " failed\n";
  return rep.ok() ? kExitOk : kExitDisagree;
}

int cmd_expand(const std::string& path, double translation_bound,
               unsigned long long seed) {
  const NamedGainGraph named = parse_graph_file(path);
  const Framework fw =
      expand_covering(named.graph, translation_bound, seed);
  emit(framework_json(fw, named.vertex_ids));
  std::cerr << "expanded to " << fw.coords.size() << " vertices, "
            << fw.edges.size() << " edges\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symrig: decide symmetry-forced generic rigidity of plane frameworks "
      "given as gain graphs, with numeric cross-checks"};
  app.require_subcommand(1);

  CommonFlags analyze_flags;
  std::string analyze_path;
  CLI::App* analyze =
      app.add_subcommand("analyze", "decide rigidity of a gain-graph file");
  analyze->add_option("file", analyze_path, "gain-graph JSON file")
      ->required();
  add_numeric_flags(*analyze, analyze_flags);
  analyze->add_option("--max-subset-arcs", analyze_flags.max_subset_arcs,
                      "cap on arcs enumerated exhaustively")
      ->default_val(kDefaultSubsetCap);

  CommonFlags laman_flags;
  std::string laman_path;
  CLI::App* laman = app.add_subcommand(
      "laman", "decide plane generic rigidity of a plain edge-list graph");
  laman->add_option("file", laman_path, "edge-list file (one 'u v' per line)")
      ->required();
  add_numeric_flags(*laman, laman_flags);

  std::string lab_check;
  int lab_max_ground = 5;
  unsigned long long lab_seed = 1;
  CLI::App* lab = app.add_subcommand(
      "matroid-lab", "run matroid identity cross-checks and probes");
  lab->add_option("check", lab_check, "which check to run")
      ->required()
      ->check(CLI::IsMember(
          {"union-check", "hgraph-check", "hadamard-check", "conjecture-probe"}));
  lab->add_option("--max-ground", lab_max_ground,
                  "ground-size cap for the exhaustive checks")
      ->default_val(5);
  lab->add_option("--seed", lab_seed, "random seed for numeric instances");

  std::string expand_path;
  double translation_bound = 1.0;
  unsigned long long expand_seed = 1;
  CLI::App* expand = app.add_subcommand(
      "expand", "write the finite covering framework of an exact gain graph");
  expand->add_option("file", expand_path, "gain-graph JSON file")->required();
  expand->add_option("--translation-bound", translation_bound,
                     "keep group elements with translation length <= bound")
      ->default_val(1.0);
  expand->add_option("--seed", expand_seed, "seed for the base placement");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(analyze_path, analyze_flags);
    if (*laman) return cmd_laman(laman_path, laman_flags);
    if (*lab) return cmd_matroid_lab(lab_check, lab_max_ground, lab_seed);
    if (*expand) return cmd_expand(expand_path, translation_bound, expand_seed);
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
