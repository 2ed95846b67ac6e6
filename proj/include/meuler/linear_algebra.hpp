// Copyright 2026 The Authors.
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

#ifndef MEULER_LINEAR_ALGEBRA_HPP_
#define MEULER_LINEAR_ALGEBRA_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "meuler/arithmetic.hpp"

namespace meuler {

/// Dense matrix over Q, row-major.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> row_reduce(RationalMatrix& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a.front().size());
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int pivot = -1;
    for (int i = row; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[row], a[pivot]);
    const Rational inv = 1 / a[row][c];
    for (int j = c; j < cols; ++j) a[row][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= factor * a[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline int matrix_rank(RationalMatrix a) { return static_cast<int>(row_reduce(a).size()); }

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

struct SolveResult {
  SolveStatus status;
  std::vector<Rational> solution;  // filled when kUnique
};

/// Solves A x = b exactly; A may have more rows than columns.
inline SolveResult solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& b) {
  const int cols = a.empty() ? 0 : static_cast<int>(a.front().size());
  RationalMatrix augmented = a;
  for (std::size_t i = 0; i < augmented.size(); ++i) augmented[i].push_back(b[i]);
  const std::vector<int> pivots = row_reduce(augmented);
  if (!pivots.empty() && pivots.back() == cols) return {SolveStatus::kInconsistent, {}};
  if (static_cast<int>(pivots.size()) < cols) return {SolveStatus::kUnderdetermined, {}};
  std::vector<Rational> x(cols);
  for (int i = 0; i < cols; ++i) x[i] = augmented[i][cols];
  return {SolveStatus::kUnique, std::move(x)};
}

}  // namespace meuler

#endif  // MEULER_LINEAR_ALGEBRA_HPP_
