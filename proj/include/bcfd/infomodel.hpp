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

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcfd/attributes.hpp"
#include "bcfd/budget.hpp"
#include "bcfd/error.hpp"
#include "bcfd/formula.hpp"

namespace bcfd {

/// Anything with attribute costs and a dependency test: determines(S, B) is
/// true when any two legitimate vectors agreeing on S agree on B.
template <class M>
concept DependencyModel = requires(const M& m, const AttrSet& s, std::size_t i) {
  { m.universe() } -> std::convertible_to<const AttributeUniverse&>;
  { m.cost(i) } -> std::convertible_to<ExtendedBudget>;
  { m.determines(s, s) } -> std::same_as<bool>;
};

/// A finite informational model with an explicit list of legitimate tuples.
/// Values are interned per attribute; domain(a) lists them in order of first
/// appearance.
class InfoModel {
 public:
  using Tuple = std::vector<std::uint32_t>;

  /// Throws PreconditionError when there are no tuples or a row or cost
  /// list has the wrong width.
  InfoModel(AttributeUniverse universe, std::vector<ExtendedBudget> costs,
            const std::vector<std::vector<std::string>>& rows);

  const AttributeUniverse& universe() const { return universe_; }
  const std::vector<ExtendedBudget>& costs() const { return costs_; }
  const ExtendedBudget& cost(std::size_t a) const { return costs_.at(a); }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  const std::vector<std::string>& domain(std::size_t a) const { return domains_.at(a); }
  const std::string& value(std::size_t tuple, std::size_t a) const {
    return domains_.at(a).at(tuples_.at(tuple).at(a));
  }

  bool determines(const AttrSet& s, const AttrSet& b) const { return !violation(s, b).has_value(); }
  /// Indices (i < j) of the first pair agreeing on s but not on b.
  std::optional<std::pair<std::size_t, std::size_t>> violation(const AttrSet& s,
                                                                const AttrSet& b) const;

  InfoModel with_costs(std::vector<ExtendedBudget> costs) const;

 private:
  InfoModel() = default;

  AttributeUniverse universe_;
  std::vector<ExtendedBudget> costs_;
  std::vector<std::vector<std::string>> domains_;
  std::vector<Tuple> tuples_;
};

/// Pointwise equality on s.
bool agrees_on(const InfoModel::Tuple& l1, const InfoModel::Tuple& l2, const AttrSet& s);

template <DependencyModel M>
ExtendedBudget set_cost(const M& m, const AttrSet& s) {
  ExtendedBudget total = Budget{};
  for (std::size_t a : s.members()) total += m.cost(a);
  return total;
}

struct EvalLimits {
  /// Most attributes (outside the lhs) that may be affordable for one atom.
  std::size_t max_affordable = 24;
};

struct AtomVerdict {
  bool holds = false;
  /// Minimum-cardinality C with cost <= budget and lhs+C determining rhs.
  std::optional<AttrSet> witness;
};

namespace detail {

/// Finite costs of attributes outside `lhs` that are at most `budget`, as
/// (cost, attribute) sorted ascending.
std::vector<std::pair<Budget, std::size_t>> affordable_attributes(
    const std::vector<ExtendedBudget>& costs, const AttrSet& lhs, const Budget& budget,
    std::size_t cap);

/// Smallest affordable C (by cardinality, then cost, then members) with
/// works(lhs + C); nullopt when none exists.
std::optional<AttrSet> search_witness(const AttrSet& lhs, const Budget& budget,
                                      const std::vector<std::pair<Budget, std::size_t>>& affordable,
                                      const std::function<bool(const AttrSet&)>& works);

template <DependencyModel M>
std::vector<ExtendedBudget> cost_vector(const M& m) {
  std::vector<ExtendedBudget> costs;
  costs.reserve(m.universe().size());
  for (std::size_t a = 0; a < m.universe().size(); ++a) costs.push_back(m.cost(a));
  return costs;
}

void check_atom_width(const Atom& t, std::size_t n);

}  // namespace detail

/// Some C with set_cost(C) <= budget makes lhs+C determine rhs. Only
/// attributes outside the lhs with finite cost <= budget are tried. Throws
/// CapExceeded when more than `limits.max_affordable` qualify.
template <DependencyModel M>
AtomVerdict eval_atom_model(const M& m, const Atom& t, const EvalLimits& limits = {}) {
  detail::check_atom_width(t, m.universe().size());
  const auto affordable =
      detail::affordable_attributes(detail::cost_vector(m), t.lhs, t.budget, limits.max_affordable);
  AttrSet everything = t.lhs;
  for (const auto& [cost, a] : affordable) everything.insert(a);
  if (!m.determines(everything, t.rhs)) return {};
  auto witness = detail::search_witness(t.lhs, t.budget, affordable,
                                        [&](const AttrSet& s) { return m.determines(s, t.rhs); });
  if (!witness) return {};
  return AtomVerdict{true, std::move(witness)};
}

template <DependencyModel M>
bool eval_formula_model(const M& m, const Formula& f, const EvalLimits& limits = {}) {
  return evaluate_with(f, [&](const Atom& t) { return eval_atom_model(m, t, limits).holds; });
}

/// Caps every cost at r (infinite costs become r).
template <class M>
M truncate_costs(const M& m, const Budget& r) {
  std::vector<ExtendedBudget> costs = m.costs();
  for (ExtendedBudget& c : costs)
    if (c > ExtendedBudget(r)) c = r;
  return m.with_costs(std::move(costs));
}

/// Why an atom fails in an explicit model: for each inclusion-maximal
/// affordable C, a pair of tuples agreeing on lhs+C and differing on rhs.
struct ModelRefutation {
  struct Entry {
    AttrSet extra;
    std::size_t first;
    std::size_t second;
  };
  std::vector<Entry> entries;
};

/// nullopt when the atom holds.
std::optional<ModelRefutation> refute_in_model(const InfoModel& m, const Atom& t,
                                               const EvalLimits& limits = {});
/// Re-validates every pair and that every affordable C lies inside some
/// listed one. Returns the first problem found.
std::optional<std::string> check_model_refutation(const InfoModel& m, const Atom& t,
                                                  const ModelRefutation& r);

/// Sums of subsets of the finite costs that are at most cap, ascending.
/// Throws CapExceeded beyond `max_points`.
std::vector<Budget> budget_grid(const std::vector<ExtendedBudget>& costs, const Budget& cap,
                                std::size_t max_points = 1 << 16);

struct MiningLimits {
  EvalLimits eval;
  std::size_t max_candidates = 1 << 20;
};

/// Every A |p {b} with |A| <= max_lhs, b outside A, p the least grid budget
/// at which the atom holds, and no A' strictly inside A holding at the same
/// p. Ordered by b, then |A|, then A.
std::vector<Atom> mine_dependencies(const InfoModel& m, const Budget& cap, std::size_t max_lhs,
                                    const MiningLimits& limits = {});

/// CSV with a header row of attribute names; values are opaque strings.
/// `costs` has one `name=cost` line per attribute (`inf` allowed).
InfoModel load_csv_model(std::string_view csv, std::string_view costs);

/// Minimal CSV reader: commas, double-quoted fields with "" escapes, LF or
/// CRLF line ends. Blank lines are skipped.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace bcfd
