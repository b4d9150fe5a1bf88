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
#include <stdexcept>

#include "netident/graph.hpp"
#include "netident/model.hpp"
#include "netident/pseudotree.hpp"

namespace netident {

/// Limits for the exhaustive reference solvers.
struct OracleBudget {
  std::size_t max_vertices = 7;
  std::size_t max_edges = 12;
  std::size_t max_nodes_explored = 5'000'000;
};

/// Thrown when an instance is larger than the budget or the search visits
/// too many nodes. Any partial result is discarded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleCovering {
  std::size_t kappa = 0;
  Covering witness;
};

/// Exact minimum number of disjoint pseudotrees covering `target`. Each
/// vertex's block of outgoing target edges is assigned to one tree label
/// (labels are introduced in canonical order), branches that give some
/// vertex two in-edges under one label are cut, and complete assignments
/// are kept when every label forms a pseudotree.
OracleCovering brute_min_covering(const DiGraph& g, const EdgeSet& target,
                                  const OracleBudget& budget = {});

/// Maximum number of vertex-disjoint paths by enumerating all simple paths
/// and searching packings exhaustively.
std::size_t brute_disjoint_paths(const DiGraph& g, const VertexSet& from, const VertexSet& to,
                                 const OracleBudget& budget = {});

/// Path test of every internal vertex with the model's stimulated set,
/// using only brute_disjoint_paths.
bool brute_identifiability(const ExtendedGraph& eg, const OracleBudget& budget = {});

/// Same with an explicit stimulated set.
bool brute_identifiability(const ExtendedGraph& eg, const VertexSet& stimulated,
                           const OracleBudget& budget = {});

}  // namespace netident
