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

#include "netident/model_io.hpp"

#include <set>

namespace netident {

namespace {

using nlohmann::json;

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ParseError("unknown key \"" + key + "\" in " + where);
  }
}

long get_int(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + " is missing \"" + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + " must be an integer");
  return v.get<long>();
}

EntryStatus get_status(const json& obj, const std::string& where) {
  if (!obj.contains("status")) return EntryStatus::Parameterized;
  const json& v = obj.at("status");
  if (v == "param") return EntryStatus::Parameterized;
  if (v == "known") return EntryStatus::Known;
  throw ParseError(where + ".status must be \"param\" or \"known\"");
}

std::size_t index_in_range(long v, long L, const std::string& what) {
  if (v < 1 || v > L) {
    throw ParseError(what + " " + std::to_string(v) + " outside 1.." + std::to_string(L));
  }
  return static_cast<std::size_t>(v);
}

const char* status_name(EntryStatus s) {
  return s == EntryStatus::Known ? "known" : "param";
}

}  // namespace

ModelSet parse_model(const json& doc) {
  only_keys(doc,
            {"schema", "L", "modules", "noise", "excited", "strictly_proper",
             "feedthrough_edges"},
            "model");
  if (doc.contains("schema") && doc.at("schema") != 1) {
    throw ParseError("unsupported schema version");
  }
  ModelSet m;
  const long L = get_int(doc, "L", "model");
  if (L < 1) throw ParseError("L must be positive");
  m.L = static_cast<int>(L);
  const auto n = static_cast<std::size_t>(L);
  m.g_pattern = PatternMatrix(n, n);

  if (!doc.contains("modules") || !doc.at("modules").is_array()) {
    throw ParseError("model.modules must be an array");
  }
  for (const json& mod : doc.at("modules")) {
    only_keys(mod, {"from", "to", "status"}, "module");
    const std::size_t from = index_in_range(get_int(mod, "from", "module"), L, "module.from");
    const std::size_t to = index_in_range(get_int(mod, "to", "module"), L, "module.to");
    if (m.g_pattern.at(to, from) != EntryStatus::Zero) {
      throw ParseError("duplicate module " + std::to_string(from) + "->" + std::to_string(to));
    }
    m.g_pattern.set(to, from, get_status(mod, "module"));
  }

  m.h_pattern = PatternMatrix(n, 0);
  if (doc.contains("noise")) {
    const json& noise = doc.at("noise");
    only_keys(noise, {"p", "columns"}, "noise");
    const long p = get_int(noise, "p", "noise");
    if (!noise.contains("columns") || !noise.at("columns").is_array()) {
      throw ParseError("noise.columns must be an array");
    }
    const json& columns = noise.at("columns");
    if (p < 0 || static_cast<std::size_t>(p) != columns.size()) {
      throw ParseError("noise.p does not match the number of columns");
    }
    m.h_pattern = PatternMatrix(n, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!columns[c].is_array()) throw ParseError("noise column must be an array");
      for (const json& entry : columns[c]) {
        only_keys(entry, {"row", "status"}, "noise entry");
        const std::size_t row = index_in_range(get_int(entry, "row", "noise entry"), L, "noise row");
        if (m.h_pattern.at(row, c + 1) != EntryStatus::Zero) {
          throw ParseError("duplicate noise entry in column " + std::to_string(c + 1));
        }
        m.h_pattern.set(row, c + 1, get_status(entry, "noise entry"));
      }
    }
  }

  if (doc.contains("excited")) {
    const json& ex = doc.at("excited");
    if (!ex.is_array()) throw ParseError("model.excited must be an array");
    for (const json& v : ex) {
      if (!v.is_number_integer()) throw ParseError("excited entries must be integers");
      m.excited.push_back(v.get<VertexId>());
    }
  }

  if (doc.contains("strictly_proper")) {
    if (!doc.at("strictly_proper").is_boolean()) {
      throw ParseError("model.strictly_proper must be a boolean");
    }
    m.strictly_proper_modules = doc.at("strictly_proper").get<bool>();
  }

  if (doc.contains("feedthrough_edges")) {
    const json& ft = doc.at("feedthrough_edges");
    if (!ft.is_array()) throw ParseError("model.feedthrough_edges must be an array");
    EdgeSet edges;
    for (const json& pair : ft) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        throw ParseError("feedthrough edge must be a pair of integers");
      }
      const auto from = static_cast<VertexId>(index_in_range(pair[0].get<long>(), L, "feedthrough"));
      const auto to = static_cast<VertexId>(index_in_range(pair[1].get<long>(), L, "feedthrough"));
      edges.insert(Edge{from, to});
    }
    m.feedthrough_edges = edges;
  }
  return m;
}

ModelSet parse_model_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_model(doc);
}

nlohmann::ordered_json model_to_json(const ModelSet& m) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["L"] = m.L;
  const auto n = static_cast<std::size_t>(m.L);

  nlohmann::ordered_json modules = nlohmann::ordered_json::array();
  for (std::size_t from = 1; from <= n; ++from) {
    for (std::size_t to = 1; to <= n; ++to) {
      const EntryStatus s = m.g_pattern.at(to, from);
      if (s == EntryStatus::Zero) continue;
      modules.push_back({{"from", from}, {"to", to}, {"status", status_name(s)}});
    }
  }
  doc["modules"] = std::move(modules);

  if (m.p() > 0) {
    nlohmann::ordered_json columns = nlohmann::ordered_json::array();
    for (std::size_t c = 1; c <= m.p(); ++c) {
      nlohmann::ordered_json col = nlohmann::ordered_json::array();
      for (std::size_t r = 1; r <= n; ++r) {
        const EntryStatus s = m.h_pattern.at(r, c);
        if (s != EntryStatus::Zero) col.push_back({{"row", r}, {"status", status_name(s)}});
      }
      columns.push_back(std::move(col));
    }
    doc["noise"] = {{"p", m.p()}, {"columns", std::move(columns)}};
  }

  doc["excited"] = m.excited;
  doc["strictly_proper"] = m.strictly_proper_modules;
  if (m.feedthrough_edges) {
    nlohmann::ordered_json ft = nlohmann::ordered_json::array();
    for (const Edge& e : *m.feedthrough_edges) ft.push_back({e.tail, e.head});
    doc["feedthrough_edges"] = std::move(ft);
  }
  return doc;
}

}  // namespace netident
