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
#include "netident/allocation.hpp"
#include "netident/merge.hpp"

namespace netident {
namespace {

TEST_CASE("diamond allocation meets the lower bound") {
  const AllocationResult r = allocate(model_from_edges(4, testing::diamond_edges()));
  CHECK(r.excited == VertexSet{1, 3});
  CHECK(r.verified);
  CHECK_FALSE(r.fallback);
  CHECK(r.pruned.empty());
  CHECK(r.bounds == Bounds{2, 2});
}

TEST_CASE("single edge") {
  const AllocationResult r = allocate(model_from_edges(2, {{1, 2}}));
  CHECK(r.excited == VertexSet{1});
  CHECK(r.verified);
}

TEST_CASE("merging example with two noise-driven roots") {
  const ExtendedGraph eg = build_extended_graph(testing::merge_example_model());
  const AllocationResult r = allocate(eg);
  REQUIRE(r.covering_used.size() == 5);
  CHECK(r.pi_s == std::vector<std::size_t>{0, 2, 3});
  CHECK(r.initial_roots == std::vector<VertexId>{2, 6, 8});
  CHECK(r.pruned == std::vector<VertexId>{6});
  CHECK(r.excited == VertexSet{2, 8});
  CHECK(r.verified);
  CHECK(r.bounds.lower == 2);
  CHECK(check_with_excitations(eg, r.excited).identifiable);
}

TEST_CASE("noise filter") {
  const ExtendedGraph quiet = build_extended_graph(model_from_edges(4, testing::diamond_edges()));
  const Covering c = algorithm1_merge(quiet).covering;
  const NoiseFilter f = noise_rooted_filter(c, quiet);
  CHECK(f.v_e.empty());
  CHECK(f.pi_s.size() == c.size());

  // Noise on vertex 1 roots the only tree.
  ModelSet m = model_from_edges(2, {{1, 2}});
  m.h_pattern = PatternMatrix(2, 1);
  m.h_pattern.set(1, 1, EntryStatus::Parameterized);
  const AllocationResult r = allocate(m);
  CHECK(r.covering_used.size() == 1);
  CHECK(r.pi_s.empty());
  CHECK(r.excited.empty());
  CHECK(r.verified);
}

TEST_CASE("root selection") {
  Covering c;
  c.trees = {*Pseudotree::from_edges({{5, 2}, {2, 9}, {9, 5}, {9, 4}}),
             *Pseudotree::from_edges({{1, 3}})};
  CHECK(select_roots(c, {0, 1}) == std::vector<VertexId>{2, 1});
  CHECK(select_roots(c, {}).empty());
}

TEST_CASE("prune drops a root already covered by noise") {
  // Known noise on 3, modules 3->1 and 1->2. With the unmerged stars the
  // star at 1 gets a candidate excitation that the noise makes redundant.
  ModelSet m = model_from_edges(3, {{3, 1}, {1, 2}});
  m.h_pattern = PatternMatrix(3, 1);
  m.h_pattern.set(3, 1, EntryStatus::Known);
  const ExtendedGraph eg = build_extended_graph(m);
  const Covering stars = initial_covering(eg);
  const PruneOutcome out = prune(eg, stars, {0}, {1});
  CHECK(out.excited.empty());
  CHECK(out.pruned == std::vector<VertexId>{1});
  CHECK(out.verified);
  CHECK_THROWS_AS(prune(eg, stars, {0}, {}), PreconditionError);
}

TEST_CASE("introductory example needs one extra excitation") {
  const AllocationResult r = allocate(testing::intro_example_model());
  CHECK(r.verified);
  CHECK(r.excited.size() <= 1);
  CHECK(r.covering_used.size() == 4);
}

TEST_CASE("no parameterized modules") {
  ModelSet m = model_from_edges(3, {});
  m.g_pattern.set(2, 1, EntryStatus::Known);
  const AllocationResult r = allocate(m);
  CHECK(r.excited.empty());
  CHECK(r.verified);
  CHECK(r.covering_used.size() == 0);
}

TEST_CASE("random allocations are sound and deterministic") {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 120) {
    const ModelSet m = testing::random_model(rng, 6, 10, 2);
    if (!validate(m).ok()) continue;
    ++checked;
    const ExtendedGraph eg = build_extended_graph(m);
    const AllocationResult r = allocate(eg);
    CHECK(r.satisfiable);
    CHECK(r.verified);
    CHECK(check_with_excitations(eg, r.excited).identifiable);
    CHECK(r.bounds.lower <= static_cast<long>(r.excited.size()));
    const AllocationResult again = allocate(eg);
    CHECK(again.excited == r.excited);
    CHECK(again.trace == r.trace);
  }
}

}  // namespace
}  // namespace netident
