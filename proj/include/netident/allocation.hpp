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

#include <cstddef>
#include <vector>

#include "netident/char_matrix.hpp"
#include "netident/identifiability.hpp"
#include "netident/model.hpp"
#include "netident/pseudotree.hpp"

namespace netident {

struct NoiseFilter {
  /// 0-based indices of the trees with no root in `v_e`, ascending.
  std::vector<std::size_t> pi_s;
  /// Vertices already driven by white noise.
  VertexSet v_e;
};

/// Splits off the trees that already have a noise-stimulated root.
NoiseFilter noise_rooted_filter(const Covering& c, const ExtendedGraph& eg);

/// Lowest root of each listed tree, in list order.
std::vector<VertexId> select_roots(const Covering& c, const std::vector<std::size_t>& trees);

struct PruneOutcome {
  VertexSet excited;
  /// Roots removed and kept removed, in removal order.
  std::vector<VertexId> pruned;
  /// Removals undone by the final verification, most recent first.
  std::vector<VertexId> restored;
  bool verified = false;
};

/// Visits the listed trees in order and drops the tree's root from the
/// excitation set whenever every vertex of the tree still passes the path
/// test without it. A full check follows; failing removals are undone from
/// the most recent one until it passes.
PruneOutcome prune(const ExtendedGraph& eg, const Covering& c,
                   const std::vector<std::size_t>& pi_s, const std::vector<VertexId>& r0);

struct AllocationResult {
  VertexSet excited;
  Covering covering_used;
  std::vector<MergeStep> trace;
  std::vector<std::size_t> pi_s;
  std::vector<VertexId> initial_roots;
  std::vector<VertexId> pruned;
  std::vector<VertexId> restored;
  /// Set when the covering-based set could not be verified and every
  /// internal vertex had to be excited instead.
  bool fallback = false;
  bool verified = false;
  /// False when even exciting every internal vertex is not enough.
  bool satisfiable = true;
  Bounds bounds;
};

/// Full synthesis: merge, filter, pick roots, prune. Designed excitations
/// already present in the model are ignored; the result replaces them.
AllocationResult allocate(const ExtendedGraph& eg);

/// Throws DomainError on an invalid model.
AllocationResult allocate(const ModelSet& m);

}  // namespace netident
