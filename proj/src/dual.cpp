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

#include "netident/dual.hpp"

#include <algorithm>

#include "netident/merge.hpp"

namespace netident {

DualModelSet DualModelSet::from_model(const ModelSet& m) {
  if (m.p() > 0) {
    throw DomainError("measurement selection requires a model without noise channels");
  }
  const ValidationReport report = validate(m);
  if (!report.ok()) throw DomainError("invalid model: " + report.violations.front().message);
  return {m.L, m.g_pattern, m.strictly_proper_modules, m.feedthrough_edges};
}

ModelSet DualModelSet::as_model() const {
  ModelSet m;
  m.L = L;
  m.g_pattern = g_pattern;
  m.h_pattern = PatternMatrix(static_cast<std::size_t>(L), 0);
  m.strictly_proper_modules = strictly_proper_modules;
  m.feedthrough_edges = feedthrough_edges;
  return m;
}

ModelSet DualModelSet::reversed() const {
  ModelSet m = as_model();
  const auto n = static_cast<std::size_t>(L);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t l = 1; l <= n; ++l) m.g_pattern.set(j, l, g_pattern.at(l, j));
  }
  if (feedthrough_edges) {
    EdgeSet flipped;
    for (const Edge& e : *feedthrough_edges) flipped.insert(e.reversed());
    m.feedthrough_edges = flipped;
  }
  return m;
}

AntiPseudotree AntiPseudotree::from_reversed(const Pseudotree& t) {
  AntiPseudotree a;
  for (const Edge& e : t.edges()) a.edges.insert(e.reversed());
  a.vertices = t.vertices();
  a.roots = t.roots();
  return a;
}

IdentReport check_measurements(const DualModelSet& m, const VertexSet& measured) {
  // Reversing the graph turns the measurement condition into the primal
  // path test with the measured vertices as the stimulated set.
  const ExtendedGraph eg = build_extended_graph(m.reversed());
  return check_vertices(eg, measured, eg.internal);
}

MeasurementResult select_measurements(const DualModelSet& m) {
  const ExtendedGraph eg = build_extended_graph(m.reversed());
  AllocationResult primal = allocate(eg);

  MeasurementResult out;
  out.measured = std::move(primal.excited);
  for (const Pseudotree& t : primal.covering_used.trees) {
    out.anti_covering.push_back(AntiPseudotree::from_reversed(t));
  }
  out.reversed_covering = std::move(primal.covering_used);
  out.trace = std::move(primal.trace);
  out.pruned = std::move(primal.pruned);
  out.fallback = primal.fallback;
  out.verified = primal.verified;
  out.satisfiable = primal.satisfiable;
  out.bounds = {excitation_lower_bound(eg), static_cast<long>(out.anti_covering.size())};
  return out;
}

Bounds measurement_bounds(const DualModelSet& m) {
  const ExtendedGraph eg = build_extended_graph(m.reversed());
  const std::size_t upper =
      eg.parameterized_edges.empty() ? 0 : algorithm1_merge(eg).covering.size();
  return {excitation_lower_bound(eg), static_cast<long>(upper)};
}

}  // namespace netident
