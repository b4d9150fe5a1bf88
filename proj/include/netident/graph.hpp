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

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

namespace netident {

/// Vertex labels are positive integers (1-based, as in network notation).
using VertexId = int;
using VertexSet = std::set<VertexId>;

/// Directed edge `tail -> head`.
struct Edge {
  VertexId tail = 0;
  VertexId head = 0;

  auto operator<=>(const Edge&) const = default;
  [[nodiscard]] Edge reversed() const { return {head, tail}; }
};

using EdgeSet = std::set<Edge>;

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Raised when an operation is applied outside its domain (unknown vertex,
/// empty graph, malformed model dimensions, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a caller violates an operation's precondition, e.g. merging a
/// pair of pseudotrees that is not mergeable.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Finite simple directed graph. Immutable after construction; all iteration
/// is in ascending vertex id.
class DiGraph {
 public:
  DiGraph() = default;

  /// Throws DomainError on self-loops, non-positive ids, or edge endpoints
  /// outside `vertices`.
  DiGraph(VertexSet vertices, const EdgeSet& edges);

  /// Graph whose vertex set is exactly the endpoints of `edges`.
  static DiGraph from_edges(const EdgeSet& edges);

  [[nodiscard]] const VertexSet& vertices() const { return vertices_; }
  [[nodiscard]] const EdgeSet& edges() const { return edges_; }
  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }

  [[nodiscard]] bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  [[nodiscard]] bool has_edge(VertexId tail, VertexId head) const {
    return edges_.contains(Edge{tail, head});
  }

  /// N^-_j. Throws DomainError for unknown j.
  [[nodiscard]] const VertexSet& in_neighbors(VertexId j) const;
  /// N^+_j. Throws DomainError for unknown j.
  [[nodiscard]] const VertexSet& out_neighbors(VertexId j) const;

  bool operator==(const DiGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  VertexSet vertices_;
  EdgeSet edges_;
  std::map<VertexId, VertexSet> in_;
  std::map<VertexId, VertexSet> out_;
};

struct SourcesAndSinks {
  VertexSet sources;
  VertexSet sinks;
};

/// Sources have no in-neighbors, sinks no out-neighbors; an isolated vertex
/// is both.
SourcesAndSinks sources_and_sinks(const DiGraph& g);

/// Weak connectivity. Throws DomainError on the empty graph.
bool is_connected(const DiGraph& g);

/// Same vertices, every edge flipped.
DiGraph reverse(const DiGraph& g);

/// Vertices reachable from `start` by directed paths (including `start`).
VertexSet reachable_from(const DiGraph& g, VertexId start);

/// Maximum number of pairwise vertex-disjoint directed paths from `from` to
/// `to`. Endpoints count as occupied vertices, and a vertex in both sets is
/// a path of length zero.
///
/// Computed as an integral max-flow on the vertex-split network: every
/// vertex v becomes v_in -> v_out with capacity one, every edge (u, v) becomes
/// u_out -> v_in, a super-source feeds each v_in with v in `from`, and each
/// v_out with v in `to` drains into a super-sink.
///
/// Throws DomainError when either set mentions an unknown vertex.
std::size_t max_vertex_disjoint_paths(const DiGraph& g, const VertexSet& from,
                                      const VertexSet& to);

}  // namespace netident
