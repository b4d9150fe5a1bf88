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

#include "netident/graph.hpp"

#include <queue>
#include <string>
#include <unordered_map>

namespace netident {

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '(' << e.tail << ',' << e.head << ')';
}

DiGraph::DiGraph(VertexSet vertices, const EdgeSet& edges)
    : vertices_(std::move(vertices)), edges_(edges) {
  for (VertexId v : vertices_) {
    if (v <= 0) {
      throw DomainError("vertex ids must be positive, got " + std::to_string(v));
    }
    in_[v];
    out_[v];
  }
  for (const Edge& e : edges_) {
    if (e.tail == e.head) {
      throw DomainError("self-loop at vertex " + std::to_string(e.tail));
    }
    if (!vertices_.contains(e.tail) || !vertices_.contains(e.head)) {
      throw DomainError("edge endpoint is not a vertex of the graph");
    }
    out_[e.tail].insert(e.head);
    in_[e.head].insert(e.tail);
  }
}

DiGraph DiGraph::from_edges(const EdgeSet& edges) {
  VertexSet vs;
  for (const Edge& e : edges) {
    vs.insert(e.tail);
    vs.insert(e.head);
  }
  return DiGraph(std::move(vs), edges);
}

const VertexSet& DiGraph::in_neighbors(VertexId j) const {
  auto it = in_.find(j);
  if (it == in_.end()) {
    throw DomainError("unknown vertex " + std::to_string(j));
  }
  return it->second;
}

const VertexSet& DiGraph::out_neighbors(VertexId j) const {
  auto it = out_.find(j);
  if (it == out_.end()) {
    throw DomainError("unknown vertex " + std::to_string(j));
  }
  return it->second;
}

SourcesAndSinks sources_and_sinks(const DiGraph& g) {
  SourcesAndSinks result;
  for (VertexId v : g.vertices()) {
    if (g.in_neighbors(v).empty()) result.sources.insert(v);
    if (g.out_neighbors(v).empty()) result.sinks.insert(v);
  }
  return result;
}

bool is_connected(const DiGraph& g) {
  if (g.vertex_count() == 0) {
    throw DomainError("connectivity of the empty graph is undefined");
  }
  VertexSet seen{*g.vertices().begin()};
  std::vector<VertexId> stack{*g.vertices().begin()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const VertexSet* nbrs : {&g.out_neighbors(v), &g.in_neighbors(v)}) {
      for (VertexId w : *nbrs) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
  }
  return seen.size() == g.vertex_count();
}

DiGraph reverse(const DiGraph& g) {
  EdgeSet flipped;
  for (const Edge& e : g.edges()) flipped.insert(e.reversed());
  return DiGraph(g.vertices(), flipped);
}

VertexSet reachable_from(const DiGraph& g, VertexId start) {
  VertexSet seen{start};
  std::vector<VertexId> stack{start};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.out_neighbors(v)) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen;
}

namespace {

/// Residual network with unit capacities; augmenting paths by BFS.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void add_arc(std::size_t from, std::size_t to) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, 1});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  std::size_t max_flow(std::size_t source, std::size_t sink) {
    std::size_t flow = 0;
    std::vector<std::size_t> parent_arc(adj_.size());
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    while (true) {
      std::fill(parent_arc.begin(), parent_arc.end(), kNone);
      std::queue<std::size_t> queue;
      queue.push(source);
      std::vector<bool> visited(adj_.size(), false);
      visited[source] = true;
      while (!queue.empty() && !visited[sink]) {
        std::size_t u = queue.front();
        queue.pop();
        for (std::size_t a : adj_[u]) {
          const Arc& arc = arcs_[a];
          if (arc.capacity > 0 && !visited[arc.to]) {
            visited[arc.to] = true;
            parent_arc[arc.to] = a;
            queue.push(arc.to);
          }
        }
      }
      if (!visited[sink]) return flow;
      for (std::size_t v = sink; v != source;) {
        std::size_t a = parent_arc[v];
        arcs_[a].capacity -= 1;
        arcs_[a ^ 1U].capacity += 1;
        v = arcs_[a ^ 1U].to;
      }
      ++flow;
    }
  }

 private:
  struct Arc {
    std::size_t to;
    int capacity;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t max_vertex_disjoint_paths(const DiGraph& g, const VertexSet& from,
                                      const VertexSet& to) {
  for (const VertexSet* s : {&from, &to}) {
    for (VertexId v : *s) {
      if (!g.has_vertex(v)) {
        throw DomainError("unknown vertex " + std::to_string(v) +
                          " in path endpoint set");
      }
    }
  }
  if (from.empty() || to.empty()) return 0;

  // node 2k is v_in, 2k+1 is v_out for the k-th vertex in ascending order.
  std::unordered_map<VertexId, std::size_t> index;
  std::size_t k = 0;
  for (VertexId v : g.vertices()) index[v] = k++;
  const std::size_t source = 2 * k;
  const std::size_t sink = 2 * k + 1;

  UnitFlowNetwork net(2 * k + 2);
  for (std::size_t i = 0; i < k; ++i) net.add_arc(2 * i, 2 * i + 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * index[e.tail] + 1, 2 * index[e.head]);
  }
  for (VertexId v : from) net.add_arc(source, 2 * index[v]);
  for (VertexId v : to) net.add_arc(2 * index[v] + 1, sink);
  return net.max_flow(source, sink);
}

}  // namespace netident
