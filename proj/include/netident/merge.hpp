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

#include <vector>

#include "netident/char_matrix.hpp"
#include "netident/model.hpp"
#include "netident/pseudotree.hpp"

namespace netident {

struct MergeResult {
  Covering covering;
  std::vector<MergeStep> trace;
};

/// Greedy merging of the initial star covering. The first phase merges rows
/// with a single One until none is left; the second phase then merges any
/// remaining One. The row and column of each merged tree are recomputed from
/// the trees, so the returned covering has no mergeable pair.
MergeResult algorithm1_merge(const EdgeSet& target_edges);
MergeResult algorithm1_merge(const ExtendedGraph& eg);

struct MatrixMergeResult {
  CharMatrix final_matrix;
  std::vector<MergeStep> trace;
};

/// The same selection policy driven purely by `reduce`, for use when only a
/// characteristic matrix is available.
MatrixMergeResult matrix_only_merge(CharMatrix m);

}  // namespace netident
