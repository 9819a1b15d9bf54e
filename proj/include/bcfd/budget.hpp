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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bcfd {

using Rational = boost::multiprecision::cpp_rational;

/// A non-negative exact rational amount. Budgets and edge weights are
/// compared against sums of costs, so no floating point is involved anywhere.
class Budget {
 public:
  Budget() = default;
  Budget(long long numerator, long long denominator = 1);
  explicit Budget(const Rational& value);

  /// Accepts "3", "1.25", "3/2". Throws ParseError on malformed or negative
  /// input.
  static Budget parse(std::string_view text);

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  Budget& operator+=(const Budget& other) {
    value_ += other.value_;
    return *this;
  }
  friend Budget operator+(Budget lhs, const Budget& rhs) { return lhs += rhs; }
  /// Throws PreconditionError when the difference would be negative.
  friend Budget operator-(const Budget& lhs, const Budget& rhs);

  friend bool operator==(const Budget& a, const Budget& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Budget& a, const Budget& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Budget& b);

/// A budget or +infinity; attribute costs in informational models.
class ExtendedBudget {
 public:
  ExtendedBudget() = default;
  ExtendedBudget(Budget finite) : finite_(std::move(finite)) {}  // NOLINT
  static ExtendedBudget infinity() {
    ExtendedBudget e;
    e.finite_.reset();
    return e;
  }
  /// Accepts everything Budget::parse does, plus "inf".
  static ExtendedBudget parse(std::string_view text);

  bool is_infinite() const { return !finite_.has_value(); }
  const Budget& finite() const { return *finite_; }
  std::string str() const;

  ExtendedBudget& operator+=(const ExtendedBudget& other);
  friend ExtendedBudget operator+(ExtendedBudget a, const ExtendedBudget& b) {
    return a += b;
  }

  friend bool operator==(const ExtendedBudget& a, const ExtendedBudget& b) {
    return a.finite_ == b.finite_;
  }
  friend std::strong_ordering operator<=>(const ExtendedBudget& a,
                                          const ExtendedBudget& b);

 private:
  std::optional<Budget> finite_{Budget{}};
};

std::ostream& operator<<(std::ostream& os, const ExtendedBudget& b);

}  // namespace bcfd
