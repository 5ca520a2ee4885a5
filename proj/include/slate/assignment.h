// Copyright 2026 The slate-toolkit Authors.
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

#ifndef SLATE_ASSIGNMENT_H_
#define SLATE_ASSIGNMENT_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace slate {

// Rectangular min-cost assignment (Kuhn-Munkres with potentials, O(n^2 m)).
// `cost` is rows x cols with rows <= cols; every row is assigned a distinct
// column. Returns the column of each row. Scalar only needs +, -, < and
// construction from int, so exact big-integer types work.
template <typename Scalar>
std::vector<std::size_t> solve_min_assignment(
    const std::vector<std::vector<Scalar>>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  const std::size_t m = cost.front().size();
  if (m < n) throw std::invalid_argument("assignment needs rows <= cols");

  // 1-based arrays; column 0 is the virtual source.
  std::vector<Scalar> u(n + 1, Scalar(0)), v(m + 1, Scalar(0));
  std::vector<std::size_t> row_of(m + 1, 0), way(m + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::vector<Scalar> minv(m + 1, Scalar(0));
    std::vector<bool> has_min(m + 1, false);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = row_of[j0];
      std::size_t j1 = 0;
      bool have_delta = false;
      Scalar delta(0);
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        Scalar cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (!has_min[j] || cur < minv[j]) {
          minv[j] = cur;
          has_min[j] = true;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          have_delta = true;
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> col_of(n, 0);
  for (std::size_t j = 1; j <= m; ++j)
    if (row_of[j] != 0) col_of[row_of[j] - 1] = j - 1;
  return col_of;
}

}  // namespace slate

#endif  // SLATE_ASSIGNMENT_H_
