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

#include "netident/merge.hpp"

namespace netident {

namespace {

// Rewrites row and column `k` of `m` from the trees of `c`.
void refresh(CharMatrix& m, const Covering& c, std::size_t k) {
  for (std::size_t l = 0; l < c.size(); ++l) {
    if (l == k) continue;
    m.set(k, l, char_entry(c.trees[k], c.trees[l]));
    m.set(l, k, char_entry(c.trees[l], c.trees[k]));
  }
}

}  // namespace

MergeResult algorithm1_merge(const EdgeSet& target_edges) {
  MergeResult result{initial_covering(target_edges), {}};
  CharMatrix m = characteristic_matrix(result.covering);

  auto apply = [&](const MergeStep& step) {
    result.covering = merge_trees(result.covering, step.from, step.into);
    m = reduce(m, step.from, step.into);
    const std::size_t merged = step.into > step.from ? step.into - 1 : step.into;
    refresh(m, result.covering, merged);
    result.trace.push_back(step);
  };

  while (auto step = select_single_one(m)) apply(*step);
  while (auto step = select_any_one(m)) apply(*step);
  return result;
}

MergeResult algorithm1_merge(const ExtendedGraph& eg) {
  return algorithm1_merge(eg.parameterized_edges);
}

MatrixMergeResult matrix_only_merge(CharMatrix m) {
  MatrixMergeResult result{std::move(m), {}};
  auto apply = [&](const MergeStep& step) {
    result.final_matrix = reduce(result.final_matrix, step.from, step.into);
    result.trace.push_back(step);
  };
  while (auto step = select_single_one(result.final_matrix)) apply(*step);
  while (auto step = select_any_one(result.final_matrix)) apply(*step);
  return result;
}

}  // namespace netident
