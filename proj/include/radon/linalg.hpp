// Copyright 2026 The RadonKit Authors
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
#include <utility>
#include <vector>

#include "radon/error.hpp"
#include "radon/rational.hpp"

namespace radon {

/// Dense row-major rational matrix. Sizes here are tiny (at most around
/// ten rows), so no effort is spent on anything beyond plain Gaussian
/// elimination.
using Matrix = std::vector<std::vector<Rational>>;

/// Exact determinant of a square matrix by rational Gaussian elimination
/// with row swaps.
inline Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidInputError("determinant needs a square matrix");
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col + 1; c < n; ++c) m[r][c] -= f * m[col][c];
      m[r][col] = 0;
    }
  }
  return det;
}

/// Reduced row echelon form in place. Pivot rule: scan columns left to
/// right, take the first (top-most unused) row with a nonzero entry.
/// Returns the pivot column of each pivot row, in order.
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivot_cols;
  if (m.empty()) return pivot_cols;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const Rational inv = Rational(1) / m[rank][col];
    for (std::size_t c = col; c < cols; ++c) m[rank][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  return pivot_cols;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// One nonzero vector of the kernel of m (m x = 0), or empty when the
/// kernel is trivial. Deterministic: the first free column gets value 1,
/// the remaining free columns 0, pivots by back substitution.
inline std::vector<Rational> kernel_vector(Matrix m) {
  if (m.empty()) throw InvalidInputError("kernel of an empty matrix is ambiguous");
  const std::size_t cols = m[0].size();
  const std::vector<std::size_t> pivot_cols = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::size_t free_col = cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == cols) return {};
  std::vector<Rational> x(cols, Rational(0));
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivot_cols.size(); ++r)
    x[pivot_cols[r]] = -m[r][free_col];
  return x;
}

/// Solves the square system a x = b exactly. Throws on a singular matrix.
inline std::vector<Rational> solve_square(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InvalidInputError("right-hand side size mismatch");
  for (std::size_t r = 0; r < n; ++r) a[r].push_back(b[r]);
  const std::vector<std::size_t> pivot_cols = rref(a);
  if (pivot_cols.size() != n || (n > 0 && pivot_cols.back() == n))
    throw InvalidInputError("singular system");
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[pivot_cols[r]] = a[r][n];
  return x;
}

}  // namespace radon
