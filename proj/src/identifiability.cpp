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

#include "netident/identifiability.hpp"

#include <algorithm>
#include <string>

namespace netident {

IdentReport check_vertices(const ExtendedGraph& eg, const VertexSet& stimulated,
                           const VertexSet& targets) {
  IdentReport report;
  for (VertexId j : targets) {
    const VertexSet in = extended_in_neighbors(eg, j);
    VertexCheck check{in.size(), max_vertex_disjoint_paths(eg.graph, stimulated, in)};
    if (check.achieved != check.required) {
      report.identifiable = false;
      report.failing_vertices.push_back(j);
    }
    report.per_vertex.emplace(j, check);
  }
  return report;
}

IdentReport check_generic_identifiability(const ExtendedGraph& eg) {
  return check_vertices(eg, eg.stimulated, eg.internal);
}

IdentReport check_with_excitations(const ExtendedGraph& eg,
                                   const VertexSet& trial_excited) {
  VertexSet stimulated = eg.noise_stimulated;
  for (VertexId v : trial_excited) {
    if (!eg.internal.contains(v)) {
      throw DomainError("trial excitation at non-internal vertex " + std::to_string(v));
    }
    stimulated.insert(v);
  }
  return check_vertices(eg, stimulated, eg.internal);
}

long excitation_lower_bound(const ExtendedGraph& eg) {
  std::size_t sources = 0;
  for (VertexId v : eg.graph.vertices()) {
    if (!eg.graph.in_neighbors(v).empty()) continue;
    const bool feeds_parameterized =
        std::any_of(eg.graph.out_neighbors(v).begin(), eg.graph.out_neighbors(v).end(),
                    [&](VertexId w) { return eg.parameterized_edges.contains(Edge{v, w}); });
    if (feeds_parameterized) ++sources;
  }
  std::size_t max_in = 0;
  for (VertexId j : eg.internal) {
    max_in = std::max(max_in, extended_in_neighbors(eg, j).size());
  }
  const long lower = static_cast<long>(std::max(sources, max_in)) - static_cast<long>(eg.p);
  return std::max(lower, 0L);
}

Bounds excitation_bounds(const ExtendedGraph& eg, std::size_t covering_size) {
  const long upper = static_cast<long>(covering_size) - static_cast<long>(eg.p);
  return {excitation_lower_bound(eg), std::max(upper, 0L)};
}

}  // namespace netident
