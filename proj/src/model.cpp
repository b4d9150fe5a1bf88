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

#include "netident/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

namespace netident {

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

namespace {

void check_dimensions(const ModelSet& m) {
  if (m.L <= 0) throw DomainError("model must have at least one vertex");
  const auto L = static_cast<std::size_t>(m.L);
  if (m.g_pattern.rows() != L || m.g_pattern.cols() != L) {
    throw DomainError("G pattern must be L x L");
  }
  if (m.h_pattern.cols() > 0 && m.h_pattern.rows() != L) {
    throw DomainError("H pattern must have L rows");
  }
}

bool has_cycle(const EdgeSet& edges) {
  const DiGraph g = DiGraph::from_edges(edges);
  // Kahn's algorithm: a cycle remains iff not every vertex gets removed.
  std::map<VertexId, std::size_t> indeg;
  for (VertexId v : g.vertices()) indeg[v] = g.in_neighbors(v).size();
  std::vector<VertexId> ready;
  for (auto [v, d] : indeg) {
    if (d == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (VertexId w : g.out_neighbors(v)) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return removed != g.vertex_count();
}

// Row/column rule on H: at most one nonzero, or all nonzeros parameterized.
bool violates_noise_rule(const std::vector<EntryStatus>& line) {
  std::size_t nonzero = 0;
  bool known = false;
  for (EntryStatus s : line) {
    if (s != EntryStatus::Zero) ++nonzero;
    if (s == EntryStatus::Known) known = true;
  }
  return nonzero > 1 && known;
}

}  // namespace

ValidationReport validate(const ModelSet& m) {
  check_dimensions(m);
  ValidationReport report;
  auto add = [&](const char* code, std::string msg) {
    report.violations.push_back({code, std::move(msg)});
  };
  const auto L = static_cast<std::size_t>(m.L);

  for (std::size_t j = 1; j <= L; ++j) {
    if (m.g_pattern.at(j, j) != EntryStatus::Zero) {
      add(kSelfLoop, "module G_" + std::to_string(j) + std::to_string(j) +
                         " on the diagonal");
    }
  }

  std::map<VertexId, int> signal_count;
  for (VertexId v : m.excited) {
    if (v < 1 || v > m.L) {
      add(kExcitedOutOfRange, "excited vertex " + std::to_string(v));
    } else if (++signal_count[v] == 2) {
      add(kDuplicateExcitation,
          "vertex " + std::to_string(v) + " listed more than once");
    }
  }

  const std::size_t p = m.p();
  if (p > L) add(kNoiseRank, std::to_string(p) + " noise channels for L = " + std::to_string(L));
  for (std::size_t r = 1; r <= (p > 0 ? L : 0); ++r) {
    std::vector<EntryStatus> row;
    for (std::size_t c = 1; c <= p; ++c) row.push_back(m.h_pattern.at(r, c));
    if (violates_noise_rule(row)) {
      add(kNoiseRowRule, "row " + std::to_string(r) +
                             " mixes a known entry with other nonzeros");
    }
  }
  for (std::size_t c = 1; c <= p; ++c) {
    std::vector<EntryStatus> col;
    for (std::size_t r = 1; r <= L; ++r) col.push_back(m.h_pattern.at(r, c));
    if (std::all_of(col.begin(), col.end(),
                    [](EntryStatus s) { return s == EntryStatus::Zero; })) {
      add(kEmptyNoiseColumn, "column " + std::to_string(c) + " has no nonzero entry");
    } else if (violates_noise_rule(col)) {
      add(kNoiseColumnRule, "column " + std::to_string(c) +
                                " mixes a known entry with other nonzeros");
    }
  }

  if (!m.strictly_proper_modules) {
    EdgeSet feedthrough;
    if (m.feedthrough_edges) {
      for (const Edge& e : *m.feedthrough_edges) {
        const bool in_range = e.tail >= 1 && e.tail <= m.L && e.head >= 1 && e.head <= m.L;
        if (!in_range || e.tail == e.head ||
            m.g_pattern.at(static_cast<std::size_t>(e.head),
                           static_cast<std::size_t>(e.tail)) == EntryStatus::Zero) {
          std::ostringstream os;
          os << "feedthrough edge " << e << " has no module";
          add(kFeedthroughNotModule, os.str());
        } else {
          feedthrough.insert(e);
        }
      }
    } else {
      // No feedthrough list: every nonzero module may have direct feedthrough.
      for (std::size_t j = 1; j <= L; ++j) {
        for (std::size_t l = 1; l <= L; ++l) {
          if (j != l && m.g_pattern.at(j, l) != EntryStatus::Zero) {
            feedthrough.insert({static_cast<VertexId>(l), static_cast<VertexId>(j)});
          }
        }
      }
    }
    if (has_cycle(feedthrough)) {
      add(kAlgebraicLoop, "feedthrough modules form a cycle");
    }
  }
  return report;
}

ExtendedGraph build_extended_graph(const ModelSet& m) {
  const ValidationReport report = validate(m);
  if (!report.ok()) {
    throw DomainError("invalid model set: " + report.violations.front().code);
  }
  const auto L = static_cast<std::size_t>(m.L);
  ExtendedGraph eg;
  eg.p = m.p();

  VertexSet vertices;
  EdgeSet edges;
  for (std::size_t v = 1; v <= L; ++v) {
    vertices.insert(static_cast<VertexId>(v));
    eg.internal.insert(static_cast<VertexId>(v));
  }
  for (std::size_t j = 1; j <= L; ++j) {
    for (std::size_t l = 1; l <= L; ++l) {
      const EntryStatus s = m.g_pattern.at(j, l);
      if (s == EntryStatus::Zero) continue;
      const Edge e{static_cast<VertexId>(l), static_cast<VertexId>(j)};
      edges.insert(e);
      if (s == EntryStatus::Parameterized) eg.parameterized_edges.insert(e);
    }
  }

  VertexId next_noise = static_cast<VertexId>(L) + 1;
  for (std::size_t c = 1; c <= eg.p; ++c) {
    bool parameterized = false;
    for (std::size_t r = 1; r <= L; ++r) {
      if (m.h_pattern.at(r, c) == EntryStatus::Parameterized) parameterized = true;
    }
    if (!parameterized) {
      // Single known entry: its vertex is driven directly by white noise.
      ++eg.p0;
      for (std::size_t r = 1; r <= L; ++r) {
        if (m.h_pattern.at(r, c) == EntryStatus::Known) {
          eg.noise_stimulated.insert(static_cast<VertexId>(r));
        }
      }
      continue;
    }
    const VertexId nv = next_noise++;
    vertices.insert(nv);
    eg.noise_vertices.insert(nv);
    eg.noise_stimulated.insert(nv);
    for (std::size_t r = 1; r <= L; ++r) {
      if (m.h_pattern.at(r, c) == EntryStatus::Parameterized) {
        const Edge e{nv, static_cast<VertexId>(r)};
        edges.insert(e);
        eg.parameterized_edges.insert(e);
      }
    }
  }

  eg.graph = DiGraph(std::move(vertices), edges);
  eg.excited.insert(m.excited.begin(), m.excited.end());
  eg.stimulated = eg.excited;
  eg.stimulated.insert(eg.noise_stimulated.begin(), eg.noise_stimulated.end());
  return eg;
}

VertexSet extended_in_neighbors(const ExtendedGraph& eg, VertexId j) {
  if (!eg.internal.contains(j)) {
    throw DomainError("vertex " + std::to_string(j) + " is not internal");
  }
  VertexSet result;
  for (VertexId i : eg.graph.in_neighbors(j)) {
    if (eg.parameterized_edges.contains(Edge{i, j})) result.insert(i);
  }
  return result;
}

ModelSet model_from_edges(int L, const EdgeSet& parameterized,
                          std::vector<VertexId> excited) {
  ModelSet m;
  m.L = L;
  const auto n = static_cast<std::size_t>(L);
  m.g_pattern = PatternMatrix(n, n);
  m.h_pattern = PatternMatrix(n, 0);
  for (const Edge& e : parameterized) {
    m.g_pattern.set(static_cast<std::size_t>(e.head), static_cast<std::size_t>(e.tail),
                    EntryStatus::Parameterized);
  }
  m.excited = std::move(excited);
  return m;
}

}  // namespace netident
