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

#pragma once

#include <vector>

#include "netident/allocation.hpp"
#include "netident/identifiability.hpp"
#include "netident/model.hpp"

namespace netident {

/// Fully excited network without process noise, in which the measured
/// vertices are to be chosen.
struct DualModelSet {
  int L = 0;
  PatternMatrix g_pattern;
  bool strictly_proper_modules = true;
  std::optional<EdgeSet> feedthrough_edges;

  /// Throws DomainError when the model has noise channels or is invalid.
  static DualModelSet from_model(const ModelSet& m);

  /// Same network with every module reversed, as a noise-free ModelSet.
  [[nodiscard]] ModelSet reversed() const;
  /// The network itself as a noise-free ModelSet.
  [[nodiscard]] ModelSet as_model() const;
};

/// Connected subgraph with out-degree at most one everywhere: a pseudotree
/// with its edges reversed. Roots are the vertices reached from every other
/// vertex.
struct AntiPseudotree {
  EdgeSet edges;
  VertexSet vertices;
  VertexSet roots;

  static AntiPseudotree from_reversed(const Pseudotree& t);
  bool operator==(const AntiPseudotree&) const = default;
};

struct MeasurementResult {
  VertexSet measured;
  std::vector<AntiPseudotree> anti_covering;
  /// The underlying pseudotree covering of the reversed graph.
  Covering reversed_covering;
  std::vector<MergeStep> trace;
  std::vector<VertexId> pruned;
  bool fallback = false;
  bool verified = false;
  bool satisfiable = true;
  Bounds bounds;
};

/// For every internal j: b from the parameterized out-neighbors of j to
/// `measured` must reach their count.
IdentReport check_measurements(const DualModelSet& m, const VertexSet& measured);

/// Primal synthesis on the reversed graph, mapped back.
MeasurementResult select_measurements(const DualModelSet& m);

/// lower = max{sinks fed by a parameterized module, max_j |N+_j|},
/// upper = size of the heuristic anti-pseudotree covering.
Bounds measurement_bounds(const DualModelSet& m);

}  // namespace netident
