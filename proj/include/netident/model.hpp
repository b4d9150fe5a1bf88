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
#include <string>
#include <vector>

#include "netident/graph.hpp"

namespace netident {

/// Structural status of one transfer-matrix entry.
enum class EntryStatus { Zero, Parameterized, Known };

/// Dense rows x cols matrix of EntryStatus with 1-based accessors, so that
/// `at(j, l)` reads module G_jl directly.
class PatternMatrix {
 public:
  PatternMatrix() = default;
  PatternMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, EntryStatus::Zero) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] EntryStatus at(std::size_t row, std::size_t col) const {
    return data_[index(row, col)];
  }
  void set(std::size_t row, std::size_t col, EntryStatus s) {
    data_[index(row, col)] = s;
  }

  bool operator==(const PatternMatrix&) const = default;

 private:
  [[nodiscard]] std::size_t index(std::size_t row, std::size_t col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) {
      throw DomainError("pattern index out of range");
    }
    return (row - 1) * cols_ + (col - 1);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<EntryStatus> data_;
};

/// Parameterization pattern of a network model set (G, R, H).
///
/// `g_pattern(j, l)` describes module G_jl, i.e. the edge l -> j.
/// `h_pattern` is L x p; column c is the c-th white-noise channel.
/// `excited` lists the vertices that carry one designed excitation signal
/// each; duplicates are kept so validation can report them.
struct ModelSet {
  int L = 0;
  PatternMatrix g_pattern;
  PatternMatrix h_pattern;
  std::vector<VertexId> excited;
  bool strictly_proper_modules = true;
  std::optional<EdgeSet> feedthrough_edges;

  [[nodiscard]] std::size_t p() const { return h_pattern.cols(); }

  bool operator==(const ModelSet&) const = default;
};

struct Violation {
  std::string code;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  [[nodiscard]] bool has(const std::string& code) const;
};

// Violation codes reported by validate().
inline constexpr const char* kSelfLoop = "self-loop module";
inline constexpr const char* kExcitedOutOfRange = "excited vertex out of range";
inline constexpr const char* kDuplicateExcitation = "multiple excitation signals";
inline constexpr const char* kNoiseRowRule = "noise row rule";
inline constexpr const char* kNoiseColumnRule = "noise column rule";
inline constexpr const char* kEmptyNoiseColumn = "empty noise column";
inline constexpr const char* kNoiseRank = "noise dimension exceeds L";
inline constexpr const char* kFeedthroughNotModule = "feedthrough edge is not a module";
inline constexpr const char* kAlgebraicLoop = "algebraic loop";

/// Structural checks: simpleness, one signal per excited vertex, the H
/// row/column rule (a row or column holds either a single nonzero or only
/// parameterized nonzeros), and the no-algebraic-loop condition when
/// modules are not strictly proper.
///
/// Throws DomainError when the pattern dimensions do not match L.
ValidationReport validate(const ModelSet& m);

/// Extended graph: internal vertices 1..L plus one source vertex per
/// parameterized noise column, numbered L+1.. in column order.
struct ExtendedGraph {
  DiGraph graph;
  VertexSet internal;
  VertexSet noise_vertices;
  /// Designed excitations R (from the model).
  VertexSet excited;
  /// V_e: noise vertices plus internal vertices driven by nonparameterized
  /// noise columns.
  VertexSet noise_stimulated;
  /// U = excited ∪ noise_stimulated.
  VertexSet stimulated;
  /// Edges that must be covered: parameterized modules and noise edges.
  /// Known modules stay in `graph` but are never covered.
  EdgeSet parameterized_edges;
  std::size_t p = 0;
  std::size_t p0 = 0;
};

/// Throws DomainError if `validate(m)` reports violations.
ExtendedGraph build_extended_graph(const ModelSet& m);

/// P̂_j: tails of the parameterized edges entering internal vertex j.
VertexSet extended_in_neighbors(const ExtendedGraph& eg, VertexId j);

/// Convenience constructor used by tests and tools: every listed edge is a
/// parameterized module, no noise.
ModelSet model_from_edges(int L, const EdgeSet& parameterized,
                          std::vector<VertexId> excited = {});

}  // namespace netident
