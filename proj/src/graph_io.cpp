#include "symrig/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "symrig/rational.hpp"

namespace symrig {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key, const char* where) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string(where) + ": missing \"" + key + "\"");
  }
  return *it;
}

int vertex_index(const std::map<std::string, int>& ids, const json& name) {
  if (!name.is_string()) throw ParseError("arc endpoint must be a vertex id string");
  const auto it = ids.find(name.get<std::string>());
  if (it == ids.end()) {
    throw ParseError("unknown vertex id \"" + name.get<std::string>() + "\"");
  }
  return it->second;
}

}  // namespace

NamedGainGraph parse_graph_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("graph file: top level must be an object");
  const json& group = require(doc, "group", "graph file");
  const json& order_j = require(group, "rotation_order", "group block");
  if (!order_j.is_number_unsigned() || order_j.get<unsigned long long>() < 1) {
    throw ParseError("group block: rotation_order must be a positive integer");
  }
  const unsigned order = order_j.get<unsigned>();
  const std::string mode = require(group, "mode", "group block").get<std::string>();
  if (mode != "exact" && mode != "numeric") {
    throw ParseError("group block: mode must be \"exact\" or \"numeric\"");
  }
  const bool exact = mode == "exact";

  const json& verts = require(doc, "vertices", "graph file");
  if (!verts.is_array() || verts.empty()) {
    throw ParseError("graph file: vertices must be a nonempty array");
  }
  std::vector<std::string> ids;
  std::map<std::string, int> index;
  for (const json& v : verts) {
    if (!v.is_string()) throw ParseError("vertex ids must be strings");
    const std::string id = v.get<std::string>();
    if (!index.emplace(id, static_cast<int>(ids.size())).second) {
      throw ParseError("duplicate vertex id \"" + id + "\"");
    }
    ids.push_back(id);
  }

  const json& arcs_j = require(doc, "arcs", "graph file");
  if (!arcs_j.is_array()) throw ParseError("graph file: arcs must be an array");
  std::vector<Arc> arcs;
  for (const json& aj : arcs_j) {
    if (!aj.is_object()) throw ParseError("each arc must be an object");
    const int from = vertex_index(index, require(aj, "from", "arc"));
    const int to = vertex_index(index, require(aj, "to", "arc"));
    Isometry gain = Isometry::identity(exact ? order : 1);
    if (exact) {
      long long rot = 0;
      if (aj.contains("rot")) {
        const json& rj = aj.at("rot");
        if (!rj.is_number_integer()) throw ParseError("arc: rot must be an integer");
        rot = rj.get<long long>();
        if (rot < 0 || rot >= static_cast<long long>(order)) {
          throw ParseError("arc: rot " + std::to_string(rot) +
                           " outside [0, " + std::to_string(order) + ")");
        }
      }
      Rational tx = 0;
      Rational ty = 0;
      if (aj.contains("trans")) {
        const json& tj = aj.at("trans");
        if (!tj.is_array() || tj.size() != 2 || !tj[0].is_string() ||
            !tj[1].is_string()) {
          throw ParseError("arc: trans must be [\"p/q\", \"p/q\"] in exact mode");
        }
        tx = parse_rational(tj[0].get<std::string>());
        ty = parse_rational(tj[1].get<std::string>());
      }
      gain = Isometry::exact(order, rot, tx, ty);
    } else {
      double angle = 0.0;
      if (aj.contains("angle")) {
        const json& an = aj.at("angle");
        if (!an.is_number()) throw ParseError("arc: angle must be a number");
        angle = an.get<double>();
      }
      std::complex<double> trans(0.0, 0.0);
      if (aj.contains("trans")) {
        const json& tj = aj.at("trans");
        if (!tj.is_array() || tj.size() != 2 || !tj[0].is_number() ||
            !tj[1].is_number()) {
          throw ParseError("arc: trans must be [x, y] floats in numeric mode");
        }
        trans = {tj[0].get<double>(), tj[1].get<double>()};
      }
      gain = Isometry::numeric(angle, trans);
    }
    arcs.push_back(Arc{from, to, std::move(gain)});
  }

  try {
    return NamedGainGraph{std::move(ids),
                          GainGraph(static_cast<int>(verts.size()),
                                    std::move(arcs), order, exact)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph file: ") + e.what());
  }
}

NamedGainGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_graph_json(doc);
}

nlohmann::json serialize_graph(const NamedGainGraph& g) {
  json doc;
  doc["group"] = {{"rotation_order", g.graph.rotation_order()},
                  {"mode", g.graph.exact() ? "exact" : "numeric"}};
  doc["vertices"] = g.vertex_ids;
  json arcs = json::array();
  for (const Arc& a : g.graph.arcs()) {
    json aj;
    aj["from"] = g.vertex_ids.at(static_cast<std::size_t>(a.from));
    aj["to"] = g.vertex_ids.at(static_cast<std::size_t>(a.to));
    if (a.gain.is_exact()) {
      aj["rot"] = a.gain.rotation_exponent();
      const CycloRat& t = a.gain.translation();
      // Recover (x, y) from x + i y; exact translations always embed with
      // rational coordinates, so read them back through the field basis.
      const auto xy = decompose_point(t);
      aj["trans"] = {format_rational(xy.first), format_rational(xy.second)};
    } else {
      aj["angle"] = a.gain.angle();
      const std::complex<double> t = a.gain.translation_numeric();
      aj["trans"] = {t.real(), t.imag()};
    }
    arcs.push_back(std::move(aj));
  }
  doc["arcs"] = std::move(arcs);
  return doc;
}

NamedSimpleGraph parse_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  NamedSimpleGraph out;
  std::map<std::string, int> index;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string u, v, extra;
    if (!(ss >> u)) continue;  // blank line
    if (!(ss >> v) || (ss >> extra)) {
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": expected exactly two vertex tokens");
    }
    for (const std::string* tok : {&u, &v}) {
      if (!index.count(*tok)) {
        index.emplace(*tok, static_cast<int>(out.vertex_ids.size()));
        out.vertex_ids.push_back(*tok);
      }
    }
    out.graph.edges.emplace_back(index.at(u), index.at(v));
  }
  out.graph.vertex_count = static_cast<int>(out.vertex_ids.size());
  return out;
}

nlohmann::json rigidity_report_json(
    const std::string& command, const RigidityReport& rep,
    const std::vector<std::string>* vertex_ids, const GainGraph* graph,
    const std::vector<std::pair<int, int>>* edges, const NumericCheck* numeric) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = command;
  doc["verdict"] = {{"independent", rep.independent},
                    {"rank", rep.rank},
                    {"target_rank", rep.target_rank},
                    {"spanning", rep.spanning},
                    {"minimally_rigid", rep.minimally_rigid},
                    {"group_alpha", rep.group_alpha},
                    {"exact", rep.exact},
                    {"flags", rep.flags}};
  if (rep.witness) {
    json w;
    json arcs = json::array();
    for_each_bit(*rep.witness, [&](int i) {
      json entry;
      entry["arc"] = i;
      int from = -1;
      int to = -1;
      if (graph != nullptr) {
        from = graph->arc(i).from;
        to = graph->arc(i).to;
      } else if (edges != nullptr) {
        from = (*edges)[static_cast<std::size_t>(i)].first;
        to = (*edges)[static_cast<std::size_t>(i)].second;
      }
      if (from >= 0 && vertex_ids != nullptr) {
        entry["from"] = vertex_ids->at(static_cast<std::size_t>(from));
        entry["to"] = vertex_ids->at(static_cast<std::size_t>(to));
      }
      arcs.push_back(std::move(entry));
    });
    w["arcs"] = std::move(arcs);
    doc["witness"] = std::move(w);
  }
  if (numeric != nullptr && numeric->ran) {
    doc["numeric"] = {{"combinatorial_rank", numeric->combinatorial_rank},
                      {"numeric_rank", numeric->numeric_rank},
                      {"agree", numeric->agree},
                      {"seed", numeric->seed},
                      {"trials", numeric->trials},
                      {"tol", numeric->tol}};
  }
  return doc;
}

nlohmann::json framework_json(const Framework& fw,
                              const std::vector<std::string>& vertex_ids) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = "expand";
  json verts = json::array();
  for (std::size_t i = 0; i < fw.coords.size(); ++i) {
    json v;
    const int base = fw.base_vertex[i];
    const std::string base_name =
        base < static_cast<int>(vertex_ids.size())
            ? vertex_ids[static_cast<std::size_t>(base)]
            : std::to_string(base);
    // Mirror the expansion's labels, with base-vertex indices swapped for the
    // input file's vertex ids.
    const bool prefixed = fw.labels[i].find(':') != std::string::npos;
    v["id"] = prefixed
                  ? "g" + std::to_string(fw.element_index[i]) + ":" + base_name
                  : base_name;
    v["x"] = fw.coords[i][0];
    v["y"] = fw.coords[i][1];
    verts.push_back(std::move(v));
  }
  doc["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& [a, b] : fw.edges) {
    edges.push_back(json::array({a, b}));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

}  // namespace symrig
