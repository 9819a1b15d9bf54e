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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace bcfd {

/// Ordered list of distinct attribute names; positions are dense 0..n-1.
class AttributeUniverse {
 public:
  AttributeUniverse() = default;
  /// Throws PreconditionError on duplicate or empty names.
  explicit AttributeUniverse(std::vector<std::string> names);
  AttributeUniverse(std::initializer_list<std::string> names)
      : AttributeUniverse(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws PreconditionError for unknown names.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const AttributeUniverse& a, const AttributeUniverse& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {
struct AttrTag {};
struct EdgeTag {};
}  // namespace detail

/// A subset of a finite index range stored as a bitset. Tagged so that
/// attribute sets and edge sets cannot be mixed up.
template <typename Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe_size) : bits_(universe_size) {}
  IndexSet(std::size_t universe_size, std::initializer_list<std::size_t> members)
      : bits_(universe_size) {
    for (std::size_t m : members) insert(m);
  }
  static IndexSet full(std::size_t universe_size) {
    IndexSet s(universe_size);
    s.bits_.set();
    return s;
  }
  static IndexSet from_indices(std::size_t universe_size,
                               const std::vector<std::size_t>& members) {
    IndexSet s(universe_size);
    for (std::size_t m : members) s.insert(m);
    return s;
  }
  /// Resolves names against `u`; throws PreconditionError on unknown names.
  static IndexSet from_names(const AttributeUniverse& u,
                             const std::vector<std::string>& names) {
    IndexSet s(u.size());
    for (const auto& n : names) s.insert(u.index_of(n));
    return s;
  }

  std::size_t universe_size() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t i) const { return i < bits_.size() && bits_.test(i); }
  IndexSet& insert(std::size_t i) {
    if (i >= bits_.size()) throw_out_of_range();
    bits_.set(i);
    return *this;
  }
  IndexSet& erase(std::size_t i) {
    if (i < bits_.size()) bits_.reset(i);
    return *this;
  }

  bool is_subset_of(const IndexSet& other) const {
    check_same(other);
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const IndexSet& other) const {
    check_same(other);
    return bits_.intersects(other.bits_);
  }

  IndexSet& operator|=(const IndexSet& o) {
    check_same(o);
    bits_ |= o.bits_;
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    check_same(o);
    bits_ &= o.bits_;
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    check_same(o);
    bits_ -= o.bits_;
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  /// Complement within the universe.
  IndexSet complement() const {
    IndexSet s = *this;
    s.bits_.flip();
    return s;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(bits_.count());
    for (auto i = bits_.find_first(); i != npos; i = bits_.find_next(i)) out.push_back(i);
    return out;
  }
  /// Smallest member, if any.
  std::optional<std::size_t> first() const {
    auto i = bits_.find_first();
    if (i == npos) return std::nullopt;
    return i;
  }
  /// Same members over a universe of a different size; members beyond the
  /// new size are dropped.
  IndexSet resized(std::size_t universe_size) const {
    IndexSet s = *this;
    s.bits_.resize(universe_size);
    return s;
  }

  /// "{a,b}" using names from `u`.
  std::string str(const AttributeUniverse& u) const {
    std::string out = "{";
    bool first_member = true;
    for (std::size_t m : members()) {
      if (!first_member) out += ',';
      out += u.name(m);
      first_member = false;
    }
    return out + '}';
  }

  const boost::dynamic_bitset<>& bits() const { return bits_; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }
  /// Lexicographic on the ascending member lists, then by universe size.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    auto i = a.bits_.find_first();
    auto j = b.bits_.find_first();
    while (i != npos && j != npos) {
      if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
      i = a.bits_.find_next(i);
      j = b.bits_.find_next(j);
    }
    if (i == npos && j == npos) return a.bits_.size() <=> b.bits_.size();
    return i == npos ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  static constexpr auto npos = boost::dynamic_bitset<>::npos;
  [[noreturn]] static void throw_out_of_range();
  void check_same(const IndexSet& o) const {
    if (o.bits_.size() != bits_.size()) throw_size_mismatch();
  }
  [[noreturn]] static void throw_size_mismatch();

  boost::dynamic_bitset<> bits_;
};

using AttrSet = IndexSet<detail::AttrTag>;
using EdgeSet = IndexSet<detail::EdgeTag>;

namespace detail {
[[noreturn]] void throw_index_out_of_range();
[[noreturn]] void throw_universe_mismatch();
}  // namespace detail

template <typename Tag>
void IndexSet<Tag>::throw_out_of_range() {
  detail::throw_index_out_of_range();
}
template <typename Tag>
void IndexSet<Tag>::throw_size_mismatch() {
  detail::throw_universe_mismatch();
}

}  // namespace bcfd
