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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace bcfd::gf2 {

/// A row vector over GF(2).
using Row = boost::dynamic_bitset<std::uint64_t>;

/// Rank of the row set.
std::size_t rank(std::vector<Row> rows);

/// Reduced row echelon form in place; returns the pivot column of each
/// remaining non-zero row, in row order. Zero rows are dropped.
std::vector<std::size_t> reduce(std::vector<Row>& rows);

/// Basis of {x : r.x = 0 for every row r}, one vector per free column in
/// ascending column order. Every row must have `columns` bits.
std::vector<Row> nullspace(std::vector<Row> rows, std::size_t columns);

/// The given columns of each row, in the given order.
std::vector<Row> select_columns(const std::vector<Row>& rows, const std::vector<std::size_t>& columns);

/// Parity of r AND x.
bool dot(const Row& r, const Row& x);

}  // namespace bcfd::gf2
