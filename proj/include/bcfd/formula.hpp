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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bcfd/attributes.hpp"
#include "bcfd/budget.hpp"

namespace bcfd {

/// A budget-constrained dependency lhs |p rhs.
struct Atom {
  AttrSet lhs;
  AttrSet rhs;
  Budget budget;

  /// "{a,b} |3 {c}".
  std::string str(const AttributeUniverse& u) const;

  friend bool operator==(const Atom&, const Atom&) = default;
  /// Lexicographic by lhs, rhs, budget.
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    if (auto c = a.rhs <=> b.rhs; c != 0) return c;
    return a.budget <=> b.budget;
  }
};

/// Boolean combination of atoms over negation and implication. And, Or and
/// Iff are desugared on construction, so every formula is one of the three
/// primitive shapes.
class Formula {
 public:
  enum class Kind { kAtom, kNot, kImplies };

  static Formula atom(Atom a);
  static Formula negation(Formula f);
  static Formula implies(Formula lhs, Formula rhs);
  /// !(a => !b)
  static Formula conjunction(Formula a, Formula b);
  /// !a => b
  static Formula disjunction(Formula a, Formula b);
  /// (a => b) & (b => a)
  static Formula iff(Formula a, Formula b);

  Kind kind() const;
  const Atom& as_atom() const;
  /// Operand of a negation.
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Not;
  struct Implies;
  using Node = std::variant<Atom, Not, Implies>;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Truth values for atoms; identical atoms share one entry.
using Assignment = std::map<Atom, bool>;

/// Grammar:
///   formula := imp ; imp := or ("=>" imp)? ; or := and ("|" and)* ;
///   and := lit ("&" lit)* ; lit := "!" lit | "(" formula ")" | atom ;
///   atom := set "|" number set ; set := "{" (ident ("," ident)*)? "}"
/// The budget must follow the atom's "|" with no whitespace in between.
Formula parse_formula(std::string_view text, const AttributeUniverse& u);
Atom parse_atom(std::string_view text, const AttributeUniverse& u);
AttrSet parse_attr_set(std::string_view text, const AttributeUniverse& u);

/// Prints in the grammar above; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f, const AttributeUniverse& u);

/// Distinct atoms in ascending order.
std::vector<Atom> atoms(const Formula& f);
Budget rank(const Formula& f);
/// Throws PreconditionError when an atom of `f` has no entry in `sigma`.
bool evaluate(const Formula& f, const Assignment& sigma);

/// Evaluates with an arbitrary atom oracle.
template <typename AtomEval>
bool evaluate_with(const Formula& f, AtomEval&& eval_atom) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return eval_atom(f.as_atom());
    case Formula::Kind::kNot:
      return !evaluate_with(f.operand(), eval_atom);
    case Formula::Kind::kImplies:
      return !evaluate_with(f.lhs(), eval_atom) || evaluate_with(f.rhs(), eval_atom);
  }
  return false;
}

/// Same formula with every attribute set re-homed into a universe of
/// `universe_size` whose first positions coincide with the original ones.
Formula widen(const Formula& f, std::size_t universe_size);

/// A formula file: optional `attrs: a,b,c` header, `#` comments, the formula
/// text on the remaining lines.
struct FormulaDocument {
  std::optional<AttributeUniverse> declared;
  std::string body;
};
FormulaDocument split_formula_document(std::string_view text);

/// Splits "a, b ,c" into trimmed names.
std::vector<std::string> split_names(std::string_view list);

}  // namespace bcfd
