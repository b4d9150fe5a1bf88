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

#include <optional>
#include <vector>

#include "netident/graph.hpp"
#include "netident/model.hpp"

namespace netident {

/// Connected directed subgraph with at least two vertices in which every
/// vertex has in-degree at most one. It is either an arborescence (a single
/// root) or contains exactly one directed cycle, whose vertices are all
/// roots. A pseudotree is determined by its edge set.
class Pseudotree {
 public:
  /// Returns nullopt when `edges` does not form a pseudotree.
  static std::optional<Pseudotree> from_edges(EdgeSet edges);

  [[nodiscard]] const EdgeSet& edges() const { return edges_; }
  [[nodiscard]] const VertexSet& vertices() const { return vertices_; }
  /// Vertices with a (necessarily unique) directed path to every other vertex.
  [[nodiscard]] const VertexSet& roots() const { return roots_; }
  [[nodiscard]] VertexId lowest_root() const { return *roots_.begin(); }

  bool operator==(const Pseudotree& other) const { return edges_ == other.edges_; }

 private:
  Pseudotree() = default;

  EdgeSet edges_;
  VertexSet vertices_;
  VertexSet roots_;
};

/// Recognizes `sub` as a pseudotree of `host` and returns its roots.
/// Edges of `sub` missing from `host` make the answer false.
std::optional<VertexSet> is_pseudotree(const DiGraph& host, const EdgeSet& sub);

/// No shared edge, and for every vertex its out-edges in the union of the
/// two trees lie in a single tree.
bool are_disjoint(const Pseudotree& t1, const Pseudotree& t2);

/// Whether `t1` can be merged into `t2`: the trees share a vertex, their
/// union is a pseudotree, and every root of `t2` reaches every vertex of `t1`
/// inside the union.
bool is_mergeable(const Pseudotree& t1, const Pseudotree& t2);

/// Ordered family of pairwise disjoint pseudotrees covering `target_edges`.
struct Covering {
  std::vector<Pseudotree> trees;
  EdgeSet target_edges;

  [[nodiscard]] std::size_t size() const { return trees.size(); }
};

/// Checks pairwise disjointness and that the trees cover the targets.
bool is_valid_covering(const Covering& c);

/// One star per vertex with outgoing target edges (root plus its target
/// out-neighbors), ordered by ascending root. Throws DomainError on an empty
/// target set.
Covering initial_covering(const EdgeSet& target_edges);
Covering initial_covering(const ExtendedGraph& eg);

/// Replaces tree `into` by the union of trees `from` and `into` (roots
/// recomputed on the union) and removes tree `from`. Indices are 0-based.
/// Throws PreconditionError if tree `from` is not mergeable to tree `into`.
Covering merge_trees(const Covering& c, std::size_t from, std::size_t into);

}  // namespace netident
