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

// Shared fixtures for the unit and acceptance tests.

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "netident/char_matrix.hpp"
#include "netident/graph.hpp"
#include "netident/model.hpp"

namespace netident::testing {

/// Rows written with '1', '0' and '-' (Empty).
inline CharMatrix matrix_from_strings(const std::vector<std::string>& rows) {
  std::vector<std::vector<CharEntry>> cells;
  for (const std::string& r : rows) {
    std::vector<CharEntry> row;
    for (char ch : r) {
      row.push_back(ch == '1' ? CharEntry::One : ch == '0' ? CharEntry::Zero : CharEntry::Empty);
    }
    cells.push_back(std::move(row));
  }
  return CharMatrix::from_rows(cells);
}

// The nine-star merging example, as reference.
inline CharMatrix reference_m0() {
  return matrix_from_strings({
      "01--0-0--",
      "001-000--",
      "-100-0-00",
      "--00-0-00",
      "01--0100-",
      "-01000000",
      "00--0001-",
      "--0010000",
      "--00-0-00",
  });
}

inline CharMatrix reference_m1() {
  return matrix_from_strings({
      "01-000--",
      "100-0-00",
      "-00-0-00",
      "0--0100-",
      "01000000",
      "0--0001-",
      "-0010000",
      "-00-0-00",
  });
}

inline CharMatrix reference_m4() {
  return matrix_from_strings({"00000", "00000", "00000", "00000", "00000"});
}

/// An 11-vertex graph whose initial stars (rooted at 1..9) have exactly the
/// reference nine-star matrix. Sources are 4 and 9, the largest in-degree is 4.
inline EdgeSet merge_example_edges() {
  return {{1, 10}, {2, 1},  {2, 3},  {2, 5},  {3, 2},  {3, 6}, {4, 6},
          {4, 11}, {5, 8},  {5, 10}, {6, 5},  {6, 11}, {7, 5}, {7, 10},
          {8, 6},  {8, 7},  {8, 11}, {9, 6},  {9, 11}};
}

/// The same graph as a model set: every module parameterized, and two
/// known noise channels acting on the sources 4 and 9.
inline ModelSet merge_example_model() {
  ModelSet m = model_from_edges(11, merge_example_edges());
  m.h_pattern = PatternMatrix(11, 2);
  m.h_pattern.set(4, 1, EntryStatus::Known);
  m.h_pattern.set(9, 2, EntryStatus::Known);
  return m;
}

/// Five-vertex network with the noise model and excitations of the
/// introductory example: columns 1 and 2 of H act on vertices 1 and 2 and
/// are parameterized, column 3 acts on vertex 3; vertices 4 and 5 are
/// excited. Only the modules 2->1 and 5->1 are given by the example; the
/// rest of the topology is a stand-in.
inline ModelSet intro_example_model() {
  ModelSet m = model_from_edges(5, {{2, 1}, {5, 1}, {3, 2}, {3, 5}, {4, 3}, {4, 5}}, {4, 5});
  m.h_pattern = PatternMatrix(5, 3);
  m.h_pattern.set(1, 1, EntryStatus::Parameterized);
  m.h_pattern.set(2, 1, EntryStatus::Parameterized);
  m.h_pattern.set(1, 2, EntryStatus::Parameterized);
  m.h_pattern.set(2, 2, EntryStatus::Parameterized);
  m.h_pattern.set(3, 3, EntryStatus::Parameterized);
  return m;
}

inline EdgeSet diamond_edges() { return {{1, 2}, {1, 3}, {2, 4}, {3, 4}}; }

/// Random simple digraph on vertices 1..n with at most `max_edges` edges.
inline EdgeSet random_edges(std::mt19937_64& rng, int n, std::size_t max_edges,
                            double density = 0.3) {
  std::vector<Edge> all;
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u != v) all.push_back({u, v});
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::bernoulli_distribution keep(density);
  EdgeSet edges;
  for (const Edge& e : all) {
    if (edges.size() < max_edges && keep(rng)) edges.insert(e);
  }
  return edges;
}

/// Random valid-or-not model set with L internal vertices: modules are
/// parameterized or (rarely) known, and up to `max_p` noise columns are
/// drawn as a single known entry, a single parameterized entry, or a
/// parameterized group. Callers filter with validate().
inline ModelSet random_model(std::mt19937_64& rng, int L, std::size_t max_edges,
                             std::size_t max_p) {
  ModelSet m;
  m.L = L;
  const auto n = static_cast<std::size_t>(L);
  m.g_pattern = PatternMatrix(n, n);
  std::bernoulli_distribution known(0.15);
  for (const Edge& e : random_edges(rng, L, max_edges)) {
    m.g_pattern.set(static_cast<std::size_t>(e.head), static_cast<std::size_t>(e.tail),
                    known(rng) ? EntryStatus::Known : EntryStatus::Parameterized);
  }
  const std::size_t p = std::uniform_int_distribution<std::size_t>(0, max_p)(rng);
  m.h_pattern = PatternMatrix(n, p);
  std::vector<std::size_t> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r] = r + 1;
  std::shuffle(rows.begin(), rows.end(), rng);
  std::size_t next = 0;
  std::uniform_int_distribution<int> kind(0, 2);
  for (std::size_t c = 1; c <= p && next < n; ++c) {
    switch (kind(rng)) {
      case 0:
        m.h_pattern.set(rows[next++], c, EntryStatus::Known);
        break;
      case 1:
        m.h_pattern.set(rows[next++], c, EntryStatus::Parameterized);
        break;
      default:
        for (int k = 0; k < 2 && next < n; ++k) {
          m.h_pattern.set(rows[next++], c, EntryStatus::Parameterized);
        }
        break;
    }
  }
  return m;
}

}  // namespace netident::testing
