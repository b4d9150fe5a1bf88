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

#include "doctest.h"
#include "fixtures.hpp"
#include "netident/merge.hpp"
#include "netident/pseudotree.hpp"

namespace netident {
namespace {

Pseudotree tree(const EdgeSet& edges) {
  auto t = Pseudotree::from_edges(edges);
  REQUIRE(t.has_value());
  return *t;
}

TEST_CASE("recognition") {
  const Pseudotree star = tree({{1, 2}, {1, 3}});
  CHECK(star.roots() == VertexSet{1});
  CHECK(star.vertices() == VertexSet{1, 2, 3});
  const Pseudotree cycle = tree({{1, 2}, {2, 3}, {3, 1}});
  CHECK(cycle.roots() == VertexSet{1, 2, 3});
  CHECK(cycle.lowest_root() == 1);
  const Pseudotree lasso = tree({{1, 2}, {2, 1}, {2, 3}});
  CHECK(lasso.roots() == VertexSet{1, 2});

  CHECK_FALSE(Pseudotree::from_edges(testing::diamond_edges()).has_value());
  CHECK_FALSE(Pseudotree::from_edges({}).has_value());
  CHECK_FALSE(Pseudotree::from_edges({{1, 2}, {3, 4}}).has_value());
}

TEST_CASE("recognition inside a host") {
  const DiGraph host = DiGraph::from_edges(testing::diamond_edges());
  CHECK(is_pseudotree(host, {{1, 2}, {2, 4}}) == VertexSet{1});
  CHECK_FALSE(is_pseudotree(host, {{1, 2}, {4, 1}}).has_value());
  CHECK_FALSE(is_pseudotree(host, testing::diamond_edges()).has_value());
}

TEST_CASE("disjointness") {
  CHECK(are_disjoint(tree({{1, 2}}), tree({{3, 4}})));
  CHECK(are_disjoint(tree({{1, 2}, {1, 3}}), tree({{2, 4}})));
  CHECK_FALSE(are_disjoint(tree({{1, 2}}), tree({{1, 3}})));
  CHECK_FALSE(are_disjoint(tree({{1, 2}, {2, 3}}), tree({{2, 3}, {3, 4}})));
}

TEST_CASE("initial covering") {
  const Covering c = initial_covering(testing::diamond_edges());
  REQUIRE(c.size() == 3);
  CHECK(c.trees[0].roots() == VertexSet{1});
  CHECK(c.trees[1].roots() == VertexSet{2});
  CHECK(c.trees[2].roots() == VertexSet{3});
  CHECK(is_valid_covering(c));

  CHECK(initial_covering(EdgeSet{{1, 2}}).size() == 1);
  CHECK(initial_covering(testing::merge_example_edges()).size() == 9);
  CHECK_THROWS_AS(initial_covering(EdgeSet{}), DomainError);
}

TEST_CASE("initial covering ignores known modules") {
  ModelSet m = model_from_edges(3, {{1, 2}});
  m.g_pattern.set(3, 2, EntryStatus::Known);
  const Covering c = initial_covering(build_extended_graph(m));
  REQUIRE(c.size() == 1);
  CHECK(c.trees[0].edges() == EdgeSet{{1, 2}});
}

TEST_CASE("mergeability") {
  const Pseudotree t1 = tree({{1, 2}, {1, 3}});
  const Pseudotree t2 = tree({{2, 4}});
  const Pseudotree t3 = tree({{3, 4}});
  CHECK(is_mergeable(t2, t1));
  CHECK_FALSE(is_mergeable(t2, t3));
  CHECK_FALSE(is_mergeable(t1, t2));
  CHECK_FALSE(is_mergeable(tree({{1, 2}}), tree({{3, 4}})));
}

TEST_CASE("merging trees") {
  const Covering c = initial_covering(testing::diamond_edges());
  const Covering merged = merge_trees(c, 1, 0);
  REQUIRE(merged.size() == 2);
  CHECK(merged.trees[0].edges() == EdgeSet{{1, 2}, {1, 3}, {2, 4}});
  CHECK(merged.trees[0].roots() == VertexSet{1});
  CHECK(merged.trees[1].edges() == EdgeSet{{3, 4}});
  CHECK(is_valid_covering(merged));
  CHECK_THROWS_AS(merge_trees(c, 0, 1), PreconditionError);
  CHECK_THROWS_AS(merge_trees(c, 0, 0), PreconditionError);
  CHECK_THROWS_AS(merge_trees(c, 5, 0), PreconditionError);
}

TEST_CASE("merging into a cycle keeps its roots") {
  Covering c;
  c.trees = {tree({{2, 4}}), tree({{1, 2}, {2, 3}, {3, 1}})};
  c.target_edges = {{2, 4}, {1, 2}, {2, 3}, {3, 1}};
  const Covering merged = merge_trees(c, 0, 1);
  REQUIRE(merged.size() == 1);
  CHECK(merged.trees[0].roots() == VertexSet{1, 2, 3});
}

TEST_CASE("initial stars are a valid maximal covering") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const EdgeSet edges = testing::random_edges(rng, 7, 12);
    if (edges.empty()) continue;
    const Covering c = initial_covering(edges);
    CHECK(is_valid_covering(c));
    const auto ends = sources_and_sinks(DiGraph::from_edges(edges));
    CHECK(c.size() == DiGraph::from_edges(edges).vertex_count() - ends.sinks.size());
  }
}

}  // namespace
}  // namespace netident
