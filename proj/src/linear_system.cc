// Copyright 2026 The MARC Solver Authors. All rights reserved.
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

#include "linear_system.h"

#include <utility>

namespace marc::internal {

std::optional<std::vector<Rational>> SolveSquare(
    std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && matrix[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(matrix[pivot], matrix[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = Rational(1) / matrix[col][col];
    for (std::size_t c = col; c < n; ++c) matrix[col][c] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || matrix[r][col].is_zero()) continue;
      const Rational factor = matrix[r][col];
      for (std::size_t c = col; c < n; ++c) {
        if (!matrix[col][c].is_zero()) matrix[r][c] -= factor * matrix[col][c];
      }
      rhs[r] -= factor * rhs[col];
    }
  }
  return rhs;
}

}  // namespace marc::internal
