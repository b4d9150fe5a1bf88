// Copyright 2026 The netident Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netident/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "netident/allocation.hpp"
#include "netident/dual.hpp"
#include "netident/identifiability.hpp"
#include "netident/merge.hpp"
#include "netident/model_io.hpp"
#include "netident/oracle.hpp"

namespace netident {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
  return os.str();
}

std::string covering_to_dot(const ExtendedGraph& eg, const Covering& c) {
  std::map<Edge, std::size_t> tree_of;
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (const Edge& e : c.trees[k].edges()) tree_of.emplace(e, k);
  }
  std::ostringstream os;
  os << "digraph netident {\n  node [shape=circle];\n";
  for (VertexId v : eg.graph.vertices()) {
    os << "  " << v;
    if (eg.noise_vertices.contains(v)) os << " [shape=box]";
    os << ";\n";
  }
  os << std::fixed << std::setprecision(3);
  for (const Edge& e : eg.graph.edges()) {
    os << "  " << e.tail << " -> " << e.head;
    auto it = tree_of.find(e);
    if (it == tree_of.end()) {
      os << " [style=dashed];\n";
      continue;
    }
    const double hue = static_cast<double>(it->second) / static_cast<double>(c.size());
    os << " [color=\"" << hue << " 0.800 0.850\", label=\"T" << it->second + 1 << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

void flatten(const Json& node, const std::string& path, std::ostringstream& os) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, path.empty() ? key : path + "." + key, os);
    }
    return;
  }
  const bool scalars_only =
      node.is_array() &&
      std::none_of(node.begin(), node.end(), [](const Json& x) { return x.is_structured(); });
  if (node.is_array() && !scalars_only) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], path + "[" + std::to_string(i) + "]", os);
    }
    return;
  }
  os << path << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
}

}  // namespace

std::string report_to_text(const Json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

namespace {

struct Options {
  std::string model_path;
  std::string format = "json";
  std::string out_path;
  std::string dot_path;
  std::size_t budget = OracleBudget{}.max_vertices;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw IoError("cannot write " + path);
}

Json to_json(const VertexSet& s) { return Json(std::vector<VertexId>(s.begin(), s.end())); }

Json to_json(const EdgeSet& edges) {
  Json arr = Json::array();
  for (const Edge& e : edges) arr.push_back({e.tail, e.head});
  return arr;
}

Json trace_json(const std::vector<MergeStep>& trace) {
  Json arr = Json::array();
  for (const MergeStep& s : trace) arr.push_back({s.from + 1, s.into + 1});
  return arr;
}

Json trees_json(const Covering& c) {
  Json arr = Json::array();
  for (std::size_t k = 0; k < c.size(); ++k) {
    arr.push_back({{"index", k + 1},
                   {"roots", to_json(c.trees[k].roots())},
                   {"edges", to_json(c.trees[k].edges())}});
  }
  return arr;
}

Json bounds_json(const Bounds& b) { return {{"lower", b.lower}, {"upper", b.upper}}; }

Json violations_json(const ValidationReport& r) {
  Json arr = Json::array();
  for (const Violation& v : r.violations) {
    arr.push_back({{"code", v.code}, {"message", v.message}});
  }
  return arr;
}

struct Outcome {
  Json result;
  int code = kExitOk;
};

Outcome cmd_validate(const ModelSet& m, const ValidationReport& report) {
  std::size_t modules = 0;
  std::size_t parameterized = 0;
  const auto n = static_cast<std::size_t>(m.L);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t l = 1; l <= n; ++l) {
      const EntryStatus s = m.g_pattern.at(j, l);
      modules += s != EntryStatus::Zero;
      parameterized += s == EntryStatus::Parameterized;
    }
  }
  Json result;
  result["valid"] = report.ok();
  result["violations"] = violations_json(report);
  result["L"] = m.L;
  result["p"] = m.p();
  result["modules"] = modules;
  result["parameterized_modules"] = parameterized;
  return {result, report.ok() ? kExitOk : kExitInvalidModel};
}

Outcome cmd_check(const ExtendedGraph& eg) {
  const IdentReport rep = check_generic_identifiability(eg);
  Json vertices = Json::array();
  for (const auto& [v, check] : rep.per_vertex) {
    vertices.push_back({{"vertex", v}, {"required", check.required}, {"achieved", check.achieved}});
  }
  Json result;
  result["identifiable"] = rep.identifiable;
  result["stimulated"] = to_json(eg.stimulated);
  result["vertices"] = std::move(vertices);
  result["failing_vertices"] = rep.failing_vertices;
  return {result, rep.identifiable ? kExitOk : kExitNotIdentifiable};
}

Outcome cmd_cover(const ExtendedGraph& eg, const Options& opt) {
  MergeResult merged;
  if (!eg.parameterized_edges.empty()) merged = algorithm1_merge(eg);
  merged.covering.target_edges = eg.parameterized_edges;
  if (!opt.dot_path.empty()) write_file(opt.dot_path, covering_to_dot(eg, merged.covering));
  Json result;
  result["size"] = merged.covering.size();
  result["trees"] = trees_json(merged.covering);
  result["trace"] = trace_json(merged.trace);
  return {result, kExitOk};
}

Outcome cmd_allocate(const ExtendedGraph& eg) {
  const AllocationResult r = allocate(eg);
  Json result;
  result["excited"] = to_json(r.excited);
  result["noise_stimulated"] = to_json(eg.noise_stimulated);
  result["initial_roots"] = r.initial_roots;
  result["pruned"] = r.pruned;
  result["restored"] = r.restored;
  result["covering_size"] = r.covering_used.size();
  result["trees"] = trees_json(r.covering_used);
  result["bounds"] = bounds_json(r.bounds);
  result["verified"] = r.verified;
  result["fallback"] = r.fallback;
  result["satisfiable"] = r.satisfiable;
  if (!r.satisfiable) {
    result["reason"] = "not identifiable even with every internal vertex excited";
    return {result, kExitUnsatisfiable};
  }
  return {result, kExitOk};
}

Outcome cmd_allocate_measurements(const ModelSet& m) {
  if (m.p() > 0) {
    Json result;
    result["valid"] = false;
    result["violations"] = Json::array(
        {{{"code", "noise present"},
          {"message", "measurement selection requires a model without noise channels"}}});
    return {result, kExitInvalidModel};
  }
  const DualModelSet dual = DualModelSet::from_model(m);
  const MeasurementResult r = select_measurements(dual);
  Json anti = Json::array();
  for (std::size_t k = 0; k < r.anti_covering.size(); ++k) {
    anti.push_back({{"index", k + 1},
                    {"roots", to_json(r.anti_covering[k].roots)},
                    {"edges", to_json(r.anti_covering[k].edges)}});
  }
  Json result;
  result["measured"] = to_json(r.measured);
  result["anti_trees"] = std::move(anti);
  result["trace"] = trace_json(r.trace);
  result["pruned"] = r.pruned;
  result["bounds"] = bounds_json(r.bounds);
  result["verified"] = r.verified;
  result["fallback"] = r.fallback;
  result["satisfiable"] = r.satisfiable;
  if (!r.satisfiable) {
    result["reason"] = "not identifiable even with every vertex measured";
    return {result, kExitUnsatisfiable};
  }
  return {result, kExitOk};
}

Outcome cmd_bounds(const ModelSet& m, const ExtendedGraph& eg) {
  const std::size_t kappa_hat =
      eg.parameterized_edges.empty() ? 0 : algorithm1_merge(eg).covering.size();
  Json result;
  Json excitation = bounds_json(excitation_bounds(eg, kappa_hat));
  excitation["covering_size"] = kappa_hat;
  result["excitation"] = std::move(excitation);
  result["measurement"] =
      m.p() == 0 ? bounds_json(measurement_bounds(DualModelSet::from_model(m))) : Json(nullptr);
  return {result, kExitOk};
}

Outcome cmd_oracle_compare(const ExtendedGraph& eg, const Options& opt) {
  OracleBudget budget;
  budget.max_vertices = opt.budget;
  budget.max_edges = std::max<std::size_t>(budget.max_edges, 2 * opt.budget - 2);

  const std::size_t kappa =
      brute_min_covering(eg.graph, eg.parameterized_edges, budget).kappa;
  const std::size_t heuristic =
      eg.parameterized_edges.empty() ? 0 : algorithm1_merge(eg).covering.size();

  bool agree = heuristic >= kappa;
  Json paths = Json::array();
  for (VertexId j : eg.internal) {
    const VertexSet in = extended_in_neighbors(eg, j);
    const std::size_t flow = max_vertex_disjoint_paths(eg.graph, eg.stimulated, in);
    const std::size_t brute = brute_disjoint_paths(eg.graph, eg.stimulated, in, budget);
    agree = agree && flow == brute;
    paths.push_back({{"vertex", j}, {"flow", flow}, {"brute", brute}});
  }
  const bool ident_flow = check_generic_identifiability(eg).identifiable;
  const bool ident_brute = brute_identifiability(eg, budget);
  agree = agree && ident_flow == ident_brute;

  Json result;
  result["budget"] = {{"max_vertices", budget.max_vertices}, {"max_edges", budget.max_edges}};
  result["kappa_oracle"] = kappa;
  result["heuristic_size"] = heuristic;
  result["paths"] = std::move(paths);
  result["identifiable"] = {{"flow", ident_flow}, {"brute", ident_brute}};
  result["agree"] = agree;
  return {result, agree ? kExitOk : kExitOracleDisagreement};
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("model", opt.model_path, "Model file (JSON)")->required();
  sub->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", opt.out_path, "Write the report to this file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Excitation and measurement allocation for dynamic networks", "netident"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Check the model file for structural violations"},
      {"check", "Path test for generic identifiability"},
      {"cover", "Disjoint pseudotree covering of the parameterized edges"},
      {"allocate", "Choose excitation locations"},
      {"allocate-measurements", "Choose measurement locations (noise-free models)"},
      {"bounds", "Bounds on the number of excitations and measurements"},
      {"oracle-compare", "Compare against exhaustive reference solvers"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, opt);
    if (name == "cover") {
      sub->add_option("--emit-dot", opt.dot_path, "Write the colored covering as DOT");
    }
    if (name == "oracle-compare") {
      sub->add_option("--budget", opt.budget, "Largest vertex count for the oracle")
          ->check(CLI::Range(1, 64));
    }
  }

  std::vector<std::string> argv_store{"netident"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitParse;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const std::string text = read_file(opt.model_path);
    const ModelSet model = parse_model_text(text);
    const ValidationReport report = validate(model);

    Outcome outcome;
    if (command == "validate") {
      outcome = cmd_validate(model, report);
    } else if (!report.ok()) {
      outcome.result["valid"] = false;
      outcome.result["violations"] = violations_json(report);
      outcome.code = kExitInvalidModel;
    } else {
      const ExtendedGraph eg = build_extended_graph(model);
      if (command == "check") outcome = cmd_check(eg);
      if (command == "cover") outcome = cmd_cover(eg, opt);
      if (command == "allocate") outcome = cmd_allocate(eg);
      if (command == "allocate-measurements") outcome = cmd_allocate_measurements(model);
      if (command == "bounds") outcome = cmd_bounds(model, eg);
      if (command == "oracle-compare") outcome = cmd_oracle_compare(eg, opt);
    }
    if (outcome.code == kExitInvalidModel) {
      for (const auto& v : outcome.result["violations"]) {
        err << "netident: " << v["code"].get<std::string>() << ": "
            << v["message"].get<std::string>() << '\n';
      }
    }

    Json doc;
    doc["command"] = command;
    doc["input"] = {{"path", opt.model_path}, {"digest", fnv1a64_hex(text)}};
    doc["result"] = std::move(outcome.result);
    const std::string rendered = opt.format == "text" ? report_to_text(doc) : doc.dump(2) + "\n";
    if (opt.out_path.empty()) {
      out << rendered;
    } else {
      write_file(opt.out_path, rendered);
    }
    return outcome.code;
  } catch (const IoError& e) {
    err << "netident: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    err << "netident: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "netident: invalid model: " << e.what() << '\n';
    return kExitInvalidModel;
  } catch (const BudgetExceeded& e) {
    err << "netident: oracle budget exceeded: " << e.what() << '\n';
    return kExitOracleBudget;
  }
}

}  // namespace netident
