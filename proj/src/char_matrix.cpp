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

#include "netident/char_matrix.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <string>

namespace netident {

CharEntry odot(CharEntry a, CharEntry b) {
  if (a == CharEntry::Zero || b == CharEntry::Zero) return CharEntry::Zero;
  if (a == CharEntry::One || b == CharEntry::One) return CharEntry::One;
  return CharEntry::Empty;
}

char symbol(CharEntry e) {
  switch (e) {
    case CharEntry::One:
      return '1';
    case CharEntry::Zero:
      return '0';
    case CharEntry::Empty:
      return '-';
  }
  return '?';
}

CharMatrix::CharMatrix(std::size_t n) : n_(n), data_(n * n, CharEntry::Empty) {
  for (std::size_t i = 0; i < n; ++i) data_[i * n + i] = CharEntry::Zero;
}

CharMatrix CharMatrix::from_rows(const std::vector<std::vector<CharEntry>>& rows) {
  CharMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw DomainError("characteristic matrix must be square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.data_[i * m.n_ + j] = rows[i][j];
  }
  return m;
}

CharEntry CharMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DomainError("characteristic matrix index out of range");
  return data_[i * n_ + j];
}

void CharMatrix::set(std::size_t i, std::size_t j, CharEntry e) {
  if (i >= n_ || j >= n_) throw DomainError("characteristic matrix index out of range");
  data_[i * n_ + j] = e;
}

std::size_t CharMatrix::count_in_row(std::size_t i, CharEntry e) const {
  if (i >= n_) throw DomainError("characteristic matrix index out of range");
  const auto row = data_.begin() + static_cast<std::ptrdiff_t>(i * n_);
  return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), e));
}

bool CharMatrix::contains(CharEntry e) const {
  return std::find(data_.begin(), data_.end(), e) != data_.end();
}

std::ostream& operator<<(std::ostream& os, const CharMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) os << ' ';
      os << symbol(m.at(i, j));
    }
    os << '\n';
  }
  return os;
}

CharEntry char_entry(const Pseudotree& t1, const Pseudotree& t2) {
  const bool overlap =
      std::any_of(t1.vertices().begin(), t1.vertices().end(),
                  [&](VertexId v) { return t2.vertices().contains(v); });
  if (!overlap) return CharEntry::Empty;
  return is_mergeable(t1, t2) ? CharEntry::One : CharEntry::Zero;
}

CharMatrix characteristic_matrix(const Covering& c) {
  CharMatrix m(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i != j) m.set(i, j, char_entry(c.trees[i], c.trees[j]));
    }
  }
  return m;
}

CharMatrix char_matrix_initial(const ExtendedGraph& eg) {
  return characteristic_matrix(initial_covering(eg));
}

CharMatrix char_matrix_from_adjacency(const EdgeSet& target_edges) {
  if (target_edges.empty()) throw DomainError("cannot cover an empty edge set");

  // Non-sinks first (ascending), then the remaining vertices, so that the
  // leading columns line up with the initial stars.
  VertexSet tails;
  VertexSet all;
  for (const Edge& e : target_edges) {
    tails.insert(e.tail);
    all.insert(e.tail);
    all.insert(e.head);
  }
  std::map<VertexId, std::size_t> index;
  for (VertexId v : tails) index.emplace(v, index.size());
  for (VertexId v : all) index.emplace(v, index.size());

  const std::size_t n = all.size();
  using Complex = std::complex<double>;
  std::vector<Complex> a(n * n, Complex{0.0, 0.0});  // row-major A + iI
  for (const Edge& e : target_edges) a[index[e.head] * n + index[e.tail]] = 1.0;
  for (std::size_t k = 0; k < n; ++k) a[k * n + k] += Complex{0.0, 1.0};

  const std::size_t stars = tails.size();
  CharMatrix m(stars);
  for (std::size_t i = 0; i < stars; ++i) {
    for (std::size_t j = 0; j < stars; ++j) {
      if (i == j) continue;
      Complex aij{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) aij += a[k * n + i] * a[k * n + j];
      const bool adjacent = a[i * n + j].real() != 0.0;
      if (aij == Complex{0.0, 0.0}) {
        m.set(i, j, CharEntry::Empty);
      } else if (aij.real() == 0.0 && aij.imag() != 0.0 && adjacent) {
        m.set(i, j, CharEntry::One);
      } else {
        m.set(i, j, CharEntry::Zero);
      }
    }
  }
  return m;
}

CharMatrix reduce(const CharMatrix& m, std::size_t i, std::size_t j) {
  const std::size_t n = m.size();
  if (i >= n || j >= n || i == j) {
    throw PreconditionError("reduce indices out of range");
  }
  if (m.at(i, j) != CharEntry::One) {
    throw PreconditionError("tree " + std::to_string(i + 1) + " is not mergeable to tree " +
                            std::to_string(j + 1));
  }
  CharMatrix work = m;
  for (std::size_t k = 0; k < n; ++k) work.set(j, k, odot(m.at(i, k), m.at(j, k)));
  for (std::size_t k = 0; k < n; ++k) work.set(k, j, odot(m.at(k, i), m.at(k, j)));

  CharMatrix out(n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == i) continue;
      out.set(rr, cc, rr == cc ? CharEntry::Zero : work.at(r, c));
      ++cc;
    }
    ++rr;
  }
  return out;
}

namespace {

std::optional<MergeStep> pick_row(const CharMatrix& m, bool single_one_only) {
  std::optional<MergeStep> best;
  std::size_t best_empty = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::size_t ones = m.count_in_row(i, CharEntry::One);
    if (ones == 0 || (single_one_only && ones != 1)) continue;
    const std::size_t empty = m.count_in_row(i, CharEntry::Empty);
    if (best && empty <= best_empty) continue;
    std::size_t j = 0;
    while (m.at(i, j) != CharEntry::One) ++j;
    best = MergeStep{i, j};
    best_empty = empty;
  }
  return best;
}

}  // namespace

std::optional<MergeStep> select_single_one(const CharMatrix& m) { return pick_row(m, true); }

std::optional<MergeStep> select_any_one(const CharMatrix& m) { return pick_row(m, false); }

}  // namespace netident
