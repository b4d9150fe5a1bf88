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

#include "netident/oracle.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace netident {

namespace {

void check_size(const DiGraph& g, std::size_t edges, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices || edges > budget.max_edges) {
    throw BudgetExceeded("instance has " + std::to_string(g.vertex_count()) + " vertices and " +
                         std::to_string(edges) + " edges; budget is " +
                         std::to_string(budget.max_vertices) + " and " +
                         std::to_string(budget.max_edges));
  }
}

class NodeCounter {
 public:
  explicit NodeCounter(std::size_t cap) : cap_(cap) {}
  void tick() {
    if (++visited_ > cap_) throw BudgetExceeded("search node budget exhausted");
  }

 private:
  std::size_t cap_;
  std::size_t visited_ = 0;
};

struct CoverSearch {
  std::vector<EdgeSet> blocks;
  std::vector<std::size_t> label_of;
  std::vector<EdgeSet> labels;
  std::vector<std::map<VertexId, int>> heads;  // per label: in-degree count
  std::size_t best = 0;
  std::vector<EdgeSet> best_labels;
  NodeCounter counter;

  void run(std::size_t k) {
    counter.tick();
    if (labels.size() >= best) return;
    if (k == blocks.size()) {
      for (const EdgeSet& l : labels) {
        if (!Pseudotree::from_edges(l)) return;
      }
      best = labels.size();
      best_labels = labels;
      return;
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (place(k, i)) {
        run(k + 1);
        unplace(k, i);
      }
    }
    labels.emplace_back();
    heads.emplace_back();
    place(k, labels.size() - 1);
    run(k + 1);
    labels.pop_back();
    heads.pop_back();
  }

  bool place(std::size_t k, std::size_t i) {
    for (const Edge& e : blocks[k]) {
      if (heads[i].contains(e.head)) return false;
    }
    for (const Edge& e : blocks[k]) {
      labels[i].insert(e);
      heads[i][e.head] = 1;
    }
    return true;
  }

  void unplace(std::size_t k, std::size_t i) {
    for (const Edge& e : blocks[k]) {
      labels[i].erase(e);
      heads[i].erase(e.head);
    }
  }
};

}  // namespace

OracleCovering brute_min_covering(const DiGraph& g, const EdgeSet& target,
                                  const OracleBudget& budget) {
  check_size(g, target.size(), budget);
  for (const Edge& e : target) {
    if (!g.has_edge(e.tail, e.head)) throw DomainError("target edge not in graph");
  }
  OracleCovering out;
  out.witness.target_edges = target;
  if (target.empty()) return out;

  std::map<VertexId, EdgeSet> by_tail;
  for (const Edge& e : target) by_tail[e.tail].insert(e);

  CoverSearch search{{}, {}, {}, {}, by_tail.size() + 1, {}, NodeCounter(budget.max_nodes_explored)};
  for (auto& [tail, block] : by_tail) search.blocks.push_back(block);
  search.run(0);

  out.kappa = search.best;
  for (EdgeSet& l : search.best_labels) {
    out.witness.trees.push_back(*Pseudotree::from_edges(std::move(l)));
  }
  return out;
}

std::size_t brute_disjoint_paths(const DiGraph& g, const VertexSet& from, const VertexSet& to,
                                 const OracleBudget& budget) {
  check_size(g, g.edge_count(), budget);
  for (VertexId v : from) {
    if (!g.has_vertex(v)) throw DomainError("unknown vertex " + std::to_string(v));
  }
  for (VertexId v : to) {
    if (!g.has_vertex(v)) throw DomainError("unknown vertex " + std::to_string(v));
  }

  std::map<VertexId, int> bit;
  for (VertexId v : g.vertices()) bit.emplace(v, static_cast<int>(bit.size()));
  NodeCounter counter(budget.max_nodes_explored);

  // Vertex masks of all simple paths, grouped by start vertex.
  std::vector<std::vector<std::uint64_t>> paths;
  for (VertexId u : from) {
    std::vector<std::uint64_t> found;
    auto extend = [&](auto&& self, VertexId v, std::uint64_t mask) -> void {
      counter.tick();
      if (to.contains(v)) found.push_back(mask);
      for (VertexId w : g.out_neighbors(v)) {
        const std::uint64_t b = std::uint64_t{1} << bit.at(w);
        if (!(mask & b)) self(self, w, mask | b);
      }
    };
    extend(extend, u, std::uint64_t{1} << bit.at(u));
    paths.push_back(std::move(found));
  }

  std::size_t best = 0;
  auto pack = [&](auto&& self, std::size_t k, std::uint64_t used, std::size_t count) -> void {
    counter.tick();
    if (count + (paths.size() - k) <= best) return;
    if (k == paths.size()) {
      best = count;
      return;
    }
    for (std::uint64_t p : paths[k]) {
      if (!(p & used)) self(self, k + 1, used | p, count + 1);
    }
    self(self, k + 1, used, count);
  };
  pack(pack, 0, 0, 0);
  return best;
}

bool brute_identifiability(const ExtendedGraph& eg, const VertexSet& stimulated,
                           const OracleBudget& budget) {
  for (VertexId j : eg.internal) {
    const VertexSet in = extended_in_neighbors(eg, j);
    if (brute_disjoint_paths(eg.graph, stimulated, in, budget) != in.size()) return false;
  }
  return true;
}

bool brute_identifiability(const ExtendedGraph& eg, const OracleBudget& budget) {
  return brute_identifiability(eg, eg.stimulated, budget);
}

}  // namespace netident
