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

#include "bcfd/attributes.hpp"

#include "bcfd/error.hpp"

namespace bcfd {

AttributeUniverse::AttributeUniverse(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw PreconditionError("empty attribute name");
    if (!index_.emplace(names_[i], i).second)
      throw PreconditionError("duplicate attribute '" + names_[i] + "'");
  }
}

std::optional<std::size_t> AttributeUniverse::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t AttributeUniverse::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw PreconditionError("unknown attribute '" + std::string(name) + "'");
}

namespace detail {

void throw_index_out_of_range() { throw PreconditionError("index out of range for its universe"); }
void throw_universe_mismatch() { throw PreconditionError("sets over different universes"); }

}  // namespace detail

}  // namespace bcfd
