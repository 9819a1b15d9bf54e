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

#include "bcfd/budget.hpp"

#include <cctype>
#include <sstream>

#include "bcfd/error.hpp"

namespace bcfd {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("malformed number '" + std::string(whole) + "'");
  cpp_int out = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed number '" + std::string(whole) + "'");
    out = out * 10 + (c - '0');
  }
  return out;
}

}  // namespace

Budget::Budget(long long numerator, long long denominator)
    : Budget(Rational(numerator, denominator)) {}

Budget::Budget(const Rational& value) : value_(value) {
  if (value_ < 0) throw PreconditionError("budget must be non-negative");
}

Budget Budget::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  if (text.front() == '-') throw ParseError("negative budget '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_digits(text.substr(0, slash), text);
    cpp_int den = parse_digits(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Budget(Rational(num, den));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw ParseError("malformed number '" + std::string(text) + "'");
    cpp_int ip = int_part.empty() ? cpp_int(0) : parse_digits(int_part, text);
    cpp_int fp = frac_part.empty() ? cpp_int(0) : parse_digits(frac_part, text);
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    return Budget(Rational(ip * scale + fp, scale));
  }
  return Budget(Rational(parse_digits(text, text)));
}

std::string Budget::str() const {
  std::ostringstream os;
  os << numerator(value_);
  if (denominator(value_) != 1) os << '/' << denominator(value_);
  return os.str();
}

Budget operator-(const Budget& lhs, const Budget& rhs) {
  if (lhs.value_ < rhs.value_)
    throw PreconditionError("budget subtraction would go negative");
  return Budget(lhs.value_ - rhs.value_);
}

std::ostream& operator<<(std::ostream& os, const Budget& b) { return os << b.str(); }

ExtendedBudget ExtendedBudget::parse(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return infinity();
  return ExtendedBudget(Budget::parse(text));
}

std::string ExtendedBudget::str() const { return is_infinite() ? "inf" : finite_->str(); }

ExtendedBudget& ExtendedBudget::operator+=(const ExtendedBudget& other) {
  if (is_infinite() || other.is_infinite()) {
    finite_.reset();
  } else {
    *finite_ += *other.finite_;
  }
  return *this;
}

std::strong_ordering operator<=>(const ExtendedBudget& a, const ExtendedBudget& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return *a.finite_ <=> *b.finite_;
}

std::ostream& operator<<(std::ostream& os, const ExtendedBudget& b) { return os << b.str(); }

}  // namespace bcfd
