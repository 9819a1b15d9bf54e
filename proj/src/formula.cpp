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

#include "bcfd/formula.hpp"

#include <algorithm>
#include <cctype>

#include "bcfd/error.hpp"

namespace bcfd {

struct Formula::Not {
  Formula operand;
};
struct Formula::Implies {
  Formula lhs;
  Formula rhs;
};

std::string Atom::str(const AttributeUniverse& u) const {
  return lhs.str(u) + " |" + budget.str() + " " + rhs.str(u);
}

Formula Formula::atom(Atom a) {
  if (a.lhs.universe_size() != a.rhs.universe_size())
    throw PreconditionError("atom sides over different universes");
  return Formula(std::make_shared<const Node>(std::move(a)));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Not{std::move(f)}));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Implies{std::move(lhs), std::move(rhs)}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return negation(implies(std::move(a), negation(std::move(b))));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return implies(negation(std::move(a)), std::move(b));
}

Formula Formula::iff(Formula a, Formula b) {
  return conjunction(implies(a, b), implies(b, a));
}

Formula::Kind Formula::kind() const {
  switch (node_->index()) {
    case 0:
      return Kind::kAtom;
    case 1:
      return Kind::kNot;
    default:
      return Kind::kImplies;
  }
}

const Atom& Formula::as_atom() const { return std::get<Atom>(*node_); }
const Formula& Formula::operand() const { return std::get<Not>(*node_).operand; }
const Formula& Formula::lhs() const { return std::get<Implies>(*node_).lhs; }
const Formula& Formula::rhs() const { return std::get<Implies>(*node_).rhs; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kAtom:
      return a.as_atom() == b.as_atom();
    case Formula::Kind::kNot:
      return a.operand() == b.operand();
    case Formula::Kind::kImplies:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '.' ||
         c == '\'';
}
bool is_number_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/';
}

class Parser {
 public:
  Parser(std::string_view text, const AttributeUniverse& u) : text_(text), u_(u) {}

  Formula parse_whole_formula() {
    Formula f = parse_imp();
    expect_end();
    return f;
  }

  Atom parse_whole_atom() {
    skip_ws();
    Atom a = parse_atom();
    expect_end();
    return a;
  }

  AttrSet parse_whole_set() {
    skip_ws();
    AttrSet s = parse_set();
    expect_end();
    return s;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    skip_ws();
    if (text_.substr(pos_, 2) == "=>") {
      pos_ += 2;
      Formula rhs = parse_imp();
      return Formula::implies(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (peek() == '|') {
      ++pos_;
      if (pos_ < text_.size() && (is_number_char(text_[pos_]) || text_[pos_] == '-'))
        fail("budget separator '|' not preceded by an attribute set");
      acc = Formula::disjunction(std::move(acc), parse_and());
    }
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_lit();
    while (peek() == '&') {
      ++pos_;
      acc = Formula::conjunction(std::move(acc), parse_lit());
    }
    return acc;
  }

  Formula parse_lit() {
    char c = peek();
    if (c == '!') {
      ++pos_;
      return Formula::negation(parse_lit());
    }
    if (c == '(') {
      ++pos_;
      Formula inner = parse_imp();
      expect(')');
      return inner;
    }
    if (c == '{') return Formula::atom(parse_atom());
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  Atom parse_atom() {
    AttrSet lhs = parse_set();
    if (peek() != '|') fail("expected '|' followed by a budget");
    ++pos_;
    if (pos_ >= text_.size() || !(is_number_char(text_[pos_]) || text_[pos_] == '-'))
      fail("missing budget after '|'");
    std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && is_number_char(text_[pos_])) ++pos_;
    Budget budget;
    try {
      budget = Budget::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start);
    }
    AttrSet rhs = parse_set();
    return Atom{std::move(lhs), std::move(rhs), std::move(budget)};
  }

  AttrSet parse_set() {
    expect('{');
    AttrSet out(u_.size());
    if (peek() == '}') {
      ++pos_;
      return out;
    }
    while (true) {
      skip_ws();
      std::size_t start = pos_;
      if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected attribute name");
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = u_.find(name);
      if (!idx) throw ParseError("unknown attribute '" + std::string(name) + "'", start);
      out.insert(*idx);
      char c = peek();
      if (c == ',') {
        ++pos_;
        continue;
      }
      if (c == '}') {
        ++pos_;
        return out;
      }
      fail("expected ',' or '}'");
    }
  }

  std::string_view text_;
  const AttributeUniverse& u_;
  std::size_t pos_ = 0;
};

void collect_atoms(const Formula& f, std::vector<Atom>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      out.push_back(f.as_atom());
      break;
    case Formula::Kind::kNot:
      collect_atoms(f.operand(), out);
      break;
    case Formula::Kind::kImplies:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      break;
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Formula parse_formula(std::string_view text, const AttributeUniverse& u) {
  return Parser(text, u).parse_whole_formula();
}

Atom parse_atom(std::string_view text, const AttributeUniverse& u) {
  return Parser(text, u).parse_whole_atom();
}

AttrSet parse_attr_set(std::string_view text, const AttributeUniverse& u) {
  return Parser(text, u).parse_whole_set();
}

namespace {

bool is_conjunction(const Formula& f) {
  return f.kind() == Formula::Kind::kNot && f.operand().kind() == Formula::Kind::kImplies &&
         f.operand().rhs().kind() == Formula::Kind::kNot;
}

}  // namespace

std::string to_string(const Formula& f, const AttributeUniverse& u) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return f.as_atom().str(u);
    case Formula::Kind::kNot: {
      const Formula& g = f.operand();
      if (is_conjunction(f))
        return "(" + to_string(g.lhs(), u) + " & " + to_string(g.rhs().operand(), u) + ")";
      return "!" + to_string(g, u);
    }
    case Formula::Kind::kImplies:
      // !x => y is a disjunction, unless !x already reads as a conjunction.
      if (f.lhs().kind() == Formula::Kind::kNot && !is_conjunction(f.lhs()))
        return "(" + to_string(f.lhs().operand(), u) + " | " + to_string(f.rhs(), u) + ")";
      return "(" + to_string(f.lhs(), u) + " => " + to_string(f.rhs(), u) + ")";
  }
  return {};
}

std::vector<Atom> atoms(const Formula& f) {
  std::vector<Atom> out;
  collect_atoms(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Budget rank(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return f.as_atom().budget;
    case Formula::Kind::kNot:
      return rank(f.operand());
    case Formula::Kind::kImplies:
      return std::max(rank(f.lhs()), rank(f.rhs()));
  }
  return {};
}

bool evaluate(const Formula& f, const Assignment& sigma) {
  return evaluate_with(f, [&](const Atom& a) {
    auto it = sigma.find(a);
    if (it == sigma.end()) throw PreconditionError("assignment has no value for an atom");
    return it->second;
  });
}

Formula widen(const Formula& f, std::size_t universe_size) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      const Atom& a = f.as_atom();
      return Formula::atom(
          Atom{a.lhs.resized(universe_size), a.rhs.resized(universe_size), a.budget});
    }
    case Formula::Kind::kNot:
      return Formula::negation(widen(f.operand(), universe_size));
    case Formula::Kind::kImplies:
      return Formula::implies(widen(f.lhs(), universe_size), widen(f.rhs(), universe_size));
  }
  return f;
}

std::vector<std::string> split_names(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string name = trim(list.substr(start, comma - start));
    if (!name.empty()) out.push_back(std::move(name));
    start = comma + 1;
  }
  return out;
}

FormulaDocument split_formula_document(std::string_view text) {
  FormulaDocument doc;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line = trim(text.substr(start, nl - start));
    start = nl + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("attrs:", 0) == 0) {
      if (doc.declared) throw ParseError("duplicate 'attrs:' header");
      doc.declared = AttributeUniverse(split_names(std::string_view(line).substr(6)));
      continue;
    }
    if (!doc.body.empty()) doc.body += ' ';
    doc.body += line;
  }
  return doc;
}

}  // namespace bcfd
