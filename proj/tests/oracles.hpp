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

// Independent reference implementations used only by the tests. They favor
// obviousness over speed and share no code with the library's algorithms.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bcfd/budget.hpp"
#include "bcfd/formula.hpp"
#include "bcfd/hypergraph.hpp"
#include "bcfd/infomodel.hpp"

namespace oracle {

using bcfd::AttrSet;
using bcfd::Budget;
using bcfd::EdgeSet;
using bcfd::Hypergraph;

inline std::set<std::size_t> as_set(const AttrSet& s) {
  auto m = s.members();
  return {m.begin(), m.end()};
}

/// Round-based fixpoint: fire every enabled edge of f until nothing changes.
inline std::set<std::size_t> closure(const Hypergraph& h, const AttrSet& a, const EdgeSet& f) {
  std::set<std::size_t> reached = as_set(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e : f.members()) {
      bool enabled = true;
      for (std::size_t t : h.edge(e).tails.members()) enabled = enabled && reached.count(t);
      if (!enabled) continue;
      for (std::size_t v : h.edge(e).heads.members()) changed |= reached.insert(v).second;
    }
  }
  return reached;
}

/// Rank over GF(2) of a 0/1 matrix by textbook elimination on int rows.
inline std::size_t rank(std::vector<std::vector<int>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c])
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
    ++r;
  }
  return r;
}

/// Definition-level atom check on an explicit model: any C over the whole
/// universe (lhs members included) with cost <= budget, any pair of tuples.
inline bool eval_atom(const bcfd::InfoModel& m, const bcfd::Atom& t) {
  const std::size_t n = m.universe().size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bcfd::ExtendedBudget cost = Budget{};
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1) cost += m.cost(a);
    if (cost > bcfd::ExtendedBudget(t.budget)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m.tuples().size() && ok; ++i)
      for (std::size_t j = 0; j < m.tuples().size() && ok; ++j) {
        bool agree = true;
        for (std::size_t a = 0; a < n; ++a)
          if ((t.lhs.contains(a) || (mask >> a & 1)) && m.value(i, a) != m.value(j, a)) agree = false;
        if (!agree) continue;
        for (std::size_t b : t.rhs.members())
          if (m.value(i, b) != m.value(j, b)) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

inline bool eval_formula(const bcfd::InfoModel& m, const bcfd::Formula& f) {
  return bcfd::evaluate_with(f, [&](const bcfd::Atom& t) { return eval_atom(m, t); });
}

/// Truth-table evaluation written directly against the sugar-free tree.
inline bool truth(const bcfd::Formula& f, const bcfd::Assignment& sigma) {
  using K = bcfd::Formula::Kind;
  if (f.kind() == K::kAtom) return sigma.at(f.as_atom());
  if (f.kind() == K::kNot) return !truth(f.operand(), sigma);
  return !truth(f.lhs(), sigma) || truth(f.rhs(), sigma);
}

// ---------------------------------------------------------------------------
// Random instance generators.

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline bcfd::AttributeUniverse letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return bcfd::AttributeUniverse(names);
}

inline AttrSet random_set(Rng& rng, std::size_t n, double p = 0.35) {
  AttrSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng, p)) s.insert(i);
  return s;
}

/// Weights from {0, 1/2, 1, 3/2, 2, 3, 5}.
inline Budget grid_weight(Rng& rng) {
  static const Budget grid[] = {Budget(0), Budget(1, 2), Budget(1), Budget(3, 2),
                                Budget(2), Budget(3), Budget(5)};
  return grid[pick(rng, 0, 6)];
}

inline Hypergraph random_hypergraph(Rng& rng, std::size_t max_vertices, std::size_t max_edges,
                                    bool allow_empty_tails = true) {
  const std::size_t n = pick(rng, 1, max_vertices);
  const std::size_t m = pick(rng, 0, max_edges);
  std::vector<bcfd::Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    AttrSet tails = random_set(rng, n, 0.3);
    if (!allow_empty_tails && tails.empty()) tails.insert(pick(rng, 0, n - 1));
    AttrSet heads = random_set(rng, n, 0.3);
    if (heads.empty()) heads.insert(pick(rng, 0, n - 1));
    edges.push_back(bcfd::Edge{tails, heads, grid_weight(rng), {}});
  }
  return Hypergraph(letters(n), std::move(edges));
}

/// Acyclic: every edge goes from lower to strictly higher vertex ids.
inline Hypergraph random_acyclic_hypergraph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = pick(rng, 2, max_vertices);
  const std::size_t m = pick(rng, 0, max_edges);
  std::vector<bcfd::Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t split = pick(rng, 1, n - 1);
    AttrSet tails(n), heads(n);
    for (std::size_t v = 0; v < split; ++v)
      if (coin(rng, 0.4)) tails.insert(v);
    for (std::size_t v = split; v < n; ++v)
      if (coin(rng, 0.4)) heads.insert(v);
    if (heads.empty()) heads.insert(pick(rng, split, n - 1));
    edges.push_back(bcfd::Edge{tails, heads, grid_weight(rng), {}});
  }
  return Hypergraph(letters(n), std::move(edges));
}

/// Costs from {0, 1, 2, 3, 1/2, inf}; values from a small alphabet.
inline bcfd::InfoModel random_model(Rng& rng, std::size_t max_attrs, std::size_t max_tuples) {
  const std::size_t n = pick(rng, 1, max_attrs);
  const std::size_t rows = pick(rng, 1, max_tuples);
  std::vector<bcfd::ExtendedBudget> costs;
  for (std::size_t a = 0; a < n; ++a) {
    switch (pick(rng, 0, 5)) {
      case 0: costs.push_back(Budget(0)); break;
      case 1: costs.push_back(Budget(1)); break;
      case 2: costs.push_back(Budget(2)); break;
      case 3: costs.push_back(Budget(3)); break;
      case 4: costs.push_back(Budget(1, 2)); break;
      default: costs.push_back(bcfd::ExtendedBudget::infinity());
    }
  }
  std::vector<std::vector<std::string>> tuples;
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::string> row;
    for (std::size_t a = 0; a < n; ++a) row.push_back(std::to_string(pick(rng, 0, 2)));
    tuples.push_back(std::move(row));
  }
  return bcfd::InfoModel(letters(n), std::move(costs), tuples);
}

inline Budget small_budget(Rng& rng) {
  static const Budget grid[] = {Budget(0), Budget(1, 2), Budget(1), Budget(2),
                                Budget(5, 2), Budget(3), Budget(4)};
  return grid[pick(rng, 0, 6)];
}

inline bcfd::Atom random_atom(Rng& rng, std::size_t n) {
  return bcfd::Atom{random_set(rng, n), random_set(rng, n), small_budget(rng)};
}

/// Random formula over atoms drawn from `pool`.
inline bcfd::Formula random_formula(Rng& rng, const std::vector<bcfd::Atom>& pool, int depth) {
  if (depth == 0 || coin(rng, 0.3)) return bcfd::Formula::atom(pool[pick(rng, 0, pool.size() - 1)]);
  switch (pick(rng, 0, 3)) {
    case 0: return bcfd::Formula::negation(random_formula(rng, pool, depth - 1));
    case 1: return bcfd::Formula::implies(random_formula(rng, pool, depth - 1), random_formula(rng, pool, depth - 1));
    case 2: return bcfd::Formula::conjunction(random_formula(rng, pool, depth - 1), random_formula(rng, pool, depth - 1));
    default: return bcfd::Formula::disjunction(random_formula(rng, pool, depth - 1), random_formula(rng, pool, depth - 1));
  }
}

}  // namespace oracle
