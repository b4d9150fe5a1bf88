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

#include <map>
#include <vector>

#include "netident/model.hpp"

namespace netident {

struct VertexCheck {
  std::size_t required = 0;  // |P̂_j|
  std::size_t achieved = 0;  // b_{U -> P̂_j}

  bool operator==(const VertexCheck&) const = default;
};

struct IdentReport {
  bool identifiable = true;
  std::map<VertexId, VertexCheck> per_vertex;
  std::vector<VertexId> failing_vertices;
};

/// Path test with the model's own stimulated set: for every internal j the
/// number of vertex-disjoint paths from U into P̂_j must equal |P̂_j|.
IdentReport check_generic_identifiability(const ExtendedGraph& eg);

/// Same test with the designed excitations replaced by `trial_excited`
/// (noise stimulation is kept). Throws DomainError if a trial vertex is not
/// internal.
IdentReport check_with_excitations(const ExtendedGraph& eg,
                                   const VertexSet& trial_excited);

/// Path test against an explicit stimulated set, restricted to `targets`.
IdentReport check_vertices(const ExtendedGraph& eg, const VertexSet& stimulated,
                           const VertexSet& targets);

/// Bounds on the number of designed excitations K.
struct Bounds {
  long lower = 0;
  long upper = 0;

  bool operator==(const Bounds&) const = default;
};

/// Lower bound max{|sources|, max_j |P̂_j|} - p, clamped at zero. Only
/// sources that feed a parameterized edge are counted: a source without
/// parameterized out-edges never appears in any P̂_j.
long excitation_lower_bound(const ExtendedGraph& eg);

/// Lower bound as above, upper bound `covering_size - p` (clamped at zero).
Bounds excitation_bounds(const ExtendedGraph& eg, std::size_t covering_size);

}  // namespace netident
