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
#include <optional>
#include <ostream>
#include <vector>

#include "netident/graph.hpp"
#include "netident/model.hpp"
#include "netident/pseudotree.hpp"

namespace netident {

/// Entry of a characteristic matrix: tree i mergeable to tree j (One), the
/// trees overlap without being mergeable (Zero), or they share no vertex
/// (Empty).
enum class CharEntry { One, Zero, Empty };

/// Merge operator on entries. Commutative; Zero absorbs everything, One
/// absorbs Empty.
CharEntry odot(CharEntry a, CharEntry b);

/// '1', '0' or '-'.
char symbol(CharEntry e);

/// Square matrix over CharEntry, 0-based.
class CharMatrix {
 public:
  CharMatrix() = default;
  /// n x n, diagonal Zero, everything else Empty.
  explicit CharMatrix(std::size_t n);

  /// Throws DomainError unless `rows` is square.
  static CharMatrix from_rows(const std::vector<std::vector<CharEntry>>& rows);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] CharEntry at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, CharEntry e);

  [[nodiscard]] std::size_t count_in_row(std::size_t i, CharEntry e) const;
  [[nodiscard]] bool contains(CharEntry e) const;

  bool operator==(const CharMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<CharEntry> data_;
};

std::ostream& operator<<(std::ostream& os, const CharMatrix& m);

/// Entry for the ordered pair (t1, t2) by direct checks.
CharEntry char_entry(const Pseudotree& t1, const Pseudotree& t2);

/// Characteristic matrix of a covering by direct mergeability checks.
CharMatrix characteristic_matrix(const Covering& c);

/// Matrix of the initial star covering of the parameterized edges.
CharMatrix char_matrix_initial(const ExtendedGraph& eg);

/// Matrix of the initial star covering of `target_edges` built from the
/// adjacency matrix alone: with A_ij = 1 iff (j, i) is an edge,
/// a_ij = col_i(A + iI)^T col_j(A + iI) over the complex numbers, and
/// for i != j the entry is One when Re a_ij = 0, Im a_ij != 0 and A_ij != 0,
/// Empty when a_ij = 0, Zero otherwise. Row k belongs to the k-th vertex
/// with an outgoing target edge, in ascending id.
CharMatrix char_matrix_from_adjacency(const EdgeSet& target_edges);

/// Row and column merge of i into j: row j <- row i (.) row j and column
/// j <- column i (.) column j, both taken from `m`; then row and column i
/// are deleted and the diagonal reset to Zero. 0-based indices. Throws
/// PreconditionError unless m(i, j) is One.
CharMatrix reduce(const CharMatrix& m, std::size_t i, std::size_t j);

/// Merge of tree `from` into tree `into`, 0-based.
struct MergeStep {
  std::size_t from = 0;
  std::size_t into = 0;

  bool operator==(const MergeStep&) const = default;
};

/// First-phase choice: among rows with exactly one One, the row with most
/// Empty entries (lowest index on ties), merged into its One column.
std::optional<MergeStep> select_single_one(const CharMatrix& m);

/// Second-phase choice: among rows with at least one One, the row with most
/// Empty entries (lowest index on ties), merged into its lowest One column.
std::optional<MergeStep> select_any_one(const CharMatrix& m);

}  // namespace netident
