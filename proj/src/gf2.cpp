// Copyright 2026 The bcfd Authors
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

#include "bcfd/gf2.hpp"

#include <stdexcept>

namespace bcfd::gf2 {

std::vector<std::size_t> reduce(std::vector<Row>& rows) {
  std::vector<std::size_t> pivots;
  std::size_t placed = 0;
  const std::size_t columns = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < columns && placed < rows.size(); ++col) {
    std::size_t found = placed;
    while (found < rows.size() && !rows[found].test(col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[placed], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != placed && rows[r].test(col)) rows[r] ^= rows[placed];
    pivots.push_back(col);
    ++placed;
  }
  rows.resize(placed);
  return pivots;
}

std::size_t rank(std::vector<Row> rows) { return reduce(rows).size(); }

std::vector<Row> nullspace(std::vector<Row> rows, std::size_t columns) {
  for (const Row& r : rows)
    if (r.size() != columns) throw std::invalid_argument("row width does not match column count");
  const std::vector<std::size_t> pivots = reduce(rows);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Row x(columns);
    x.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i].test(free)) x.set(pivots[i]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Row> select_columns(const std::vector<Row>& rows, const std::vector<std::size_t>& columns) {
  std::vector<Row> out;
  out.reserve(rows.size());
  for (const Row& r : rows) {
    Row s(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      if (r.test(columns[j])) s.set(j);
    out.push_back(std::move(s));
  }
  return out;
}

bool dot(const Row& r, const Row& x) { return (r & x).count() % 2 == 1; }

}  // namespace bcfd::gf2
