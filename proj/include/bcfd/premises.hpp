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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bcfd/attributes.hpp"
#include "bcfd/formula.hpp"

namespace bcfd {

/// Deduplicated atoms over one universe. Order is first occurrence; position
/// i is edge i of the canonical hypergraph.
class PremiseSet {
 public:
  PremiseSet() = default;
  /// `labels` is empty or parallel to `atoms`; a dropped duplicate drops its
  /// label too.
  explicit PremiseSet(AttributeUniverse universe, std::vector<Atom> atoms = {},
                      std::vector<std::string> labels = {});

  const AttributeUniverse& universe() const { return universe_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool contains(const Atom& a) const { return index_.count(a) != 0; }
  /// Label of premise i, or empty.
  const std::string& label(std::size_t i) const { return labels_.at(i); }

 private:
  AttributeUniverse universe_;
  std::vector<Atom> atoms_;
  std::vector<std::string> labels_;
  std::set<Atom> index_;
};

/// Premise file: `attrs: a,b` header (or `declared`), `#` comments, one atom
/// per line, optionally prefixed by `label:`. Both a header and a different
/// `declared` universe is an error.
PremiseSet parse_premises(std::string_view text,
                          const std::optional<AttributeUniverse>& declared = std::nullopt);

}  // namespace bcfd
