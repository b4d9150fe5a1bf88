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

#include "netident/pseudotree.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace netident {

std::optional<Pseudotree> Pseudotree::from_edges(EdgeSet edges) {
  if (edges.empty()) return std::nullopt;
  std::map<VertexId, int> indeg;
  for (const Edge& e : edges) {
    if (e.tail == e.head) return std::nullopt;
    if (++indeg[e.head] > 1) return std::nullopt;
  }
  const DiGraph g = DiGraph::from_edges(edges);
  if (!is_connected(g)) return std::nullopt;

  Pseudotree t;
  t.vertices_ = g.vertices();
  for (VertexId v : t.vertices_) {
    if (reachable_from(g, v).size() == t.vertices_.size()) t.roots_.insert(v);
  }
  t.edges_ = std::move(edges);
  return t;
}

std::optional<VertexSet> is_pseudotree(const DiGraph& host, const EdgeSet& sub) {
  for (const Edge& e : sub) {
    if (!host.has_edge(e.tail, e.head)) return std::nullopt;
  }
  auto t = Pseudotree::from_edges(sub);
  if (!t) return std::nullopt;
  return t->roots();
}

bool are_disjoint(const Pseudotree& t1, const Pseudotree& t2) {
  // Owner of each vertex's out-edges: 1, 2, or conflict.
  std::map<VertexId, int> owner;
  for (const Edge& e : t1.edges()) {
    if (t2.edges().contains(e)) return false;
    owner[e.tail] = 1;
  }
  for (const Edge& e : t2.edges()) {
    auto [it, inserted] = owner.emplace(e.tail, 2);
    if (!inserted && it->second != 2) return false;
  }
  return true;
}

bool is_mergeable(const Pseudotree& t1, const Pseudotree& t2) {
  const bool share_vertex =
      std::any_of(t1.vertices().begin(), t1.vertices().end(),
                  [&](VertexId v) { return t2.vertices().contains(v); });
  if (!share_vertex) return false;

  EdgeSet joined = t1.edges();
  joined.insert(t2.edges().begin(), t2.edges().end());
  auto merged = Pseudotree::from_edges(std::move(joined));
  if (!merged) return false;

  const DiGraph g = DiGraph::from_edges(merged->edges());
  for (VertexId r : t2.roots()) {
    const VertexSet reach = reachable_from(g, r);
    if (!std::includes(reach.begin(), reach.end(), t1.vertices().begin(),
                       t1.vertices().end())) {
      return false;
    }
  }
  return true;
}

bool is_valid_covering(const Covering& c) {
  for (std::size_t i = 0; i < c.trees.size(); ++i) {
    for (std::size_t j = i + 1; j < c.trees.size(); ++j) {
      if (!are_disjoint(c.trees[i], c.trees[j])) return false;
    }
  }
  EdgeSet covered;
  for (const Pseudotree& t : c.trees) covered.insert(t.edges().begin(), t.edges().end());
  return std::includes(covered.begin(), covered.end(), c.target_edges.begin(),
                       c.target_edges.end());
}

Covering initial_covering(const EdgeSet& target_edges) {
  if (target_edges.empty()) {
    throw DomainError("cannot cover an empty edge set");
  }
  std::map<VertexId, EdgeSet> stars;
  for (const Edge& e : target_edges) stars[e.tail].insert(e);

  Covering c;
  c.target_edges = target_edges;
  for (auto& [root, star] : stars) {
    c.trees.push_back(*Pseudotree::from_edges(std::move(star)));
  }
  return c;
}

Covering initial_covering(const ExtendedGraph& eg) {
  return initial_covering(eg.parameterized_edges);
}

Covering merge_trees(const Covering& c, std::size_t from, std::size_t into) {
  if (from >= c.size() || into >= c.size() || from == into) {
    throw PreconditionError("merge indices out of range");
  }
  if (!is_mergeable(c.trees[from], c.trees[into])) {
    throw PreconditionError("tree " + std::to_string(from + 1) +
                            " is not mergeable to tree " + std::to_string(into + 1));
  }
  EdgeSet joined = c.trees[into].edges();
  joined.insert(c.trees[from].edges().begin(), c.trees[from].edges().end());

  Covering result;
  result.target_edges = c.target_edges;
  result.trees = c.trees;
  result.trees[into] = *Pseudotree::from_edges(std::move(joined));
  result.trees.erase(result.trees.begin() + static_cast<std::ptrdiff_t>(from));
  return result;
}

}  // namespace netident
