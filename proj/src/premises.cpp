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

#include "bcfd/premises.hpp"

#include <cctype>
#include <string>

#include "bcfd/error.hpp"

namespace bcfd {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

PremiseSet::PremiseSet(AttributeUniverse universe, std::vector<Atom> atoms,
                       std::vector<std::string> labels)
    : universe_(std::move(universe)) {
  if (!labels.empty() && labels.size() != atoms.size())
    throw PreconditionError("premise labels do not match the premises");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Atom& a = atoms[i];
    if (a.lhs.universe_size() != universe_.size() || a.rhs.universe_size() != universe_.size())
      throw PreconditionError("premise is not over the declared universe");
    if (index_.insert(a).second) {
      atoms_.push_back(std::move(a));
      labels_.push_back(labels.empty() ? std::string() : std::move(labels[i]));
    }
  }
}

PremiseSet parse_premises(std::string_view text, const std::optional<AttributeUniverse>& declared) {
  std::optional<AttributeUniverse> universe = declared;
  std::vector<std::string> lines;
  std::size_t start = 0;
  std::size_t line_no = 0;
  std::vector<std::size_t> line_numbers;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(start, nl - start));
    start = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    line.erase(0, b);
    if (line.empty()) continue;
    if (line.rfind("attrs:", 0) == 0) {
      AttributeUniverse header(split_names(std::string_view(line).substr(6)));
      if (universe && !(*universe == header))
        throw ParseError("attribute header does not match the declared universe");
      universe = std::move(header);
      continue;
    }
    lines.push_back(std::move(line));
    line_numbers.push_back(line_no);
  }
  if (!universe) throw ParseError("premises need an 'attrs:' header or --attrs");
  std::vector<Atom> atoms;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view body = lines[i];
    std::string label;
    if (std::size_t brace = body.find('{'); brace != std::string_view::npos) {
      std::size_t colon = body.substr(0, brace).rfind(':');
      if (colon != std::string_view::npos) {
        label = trim(body.substr(0, colon));
        body = body.substr(colon + 1);
      }
    }
    try {
      atoms.push_back(parse_atom(body, *universe));
      labels.push_back(std::move(label));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_numbers[i]) + ": " + e.what());
    }
  }
  return PremiseSet(std::move(*universe), std::move(atoms), std::move(labels));
}

}  // namespace bcfd
