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

#include "bcfd/infomodel.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

namespace bcfd {

InfoModel::InfoModel(AttributeUniverse universe, std::vector<ExtendedBudget> costs,
                     const std::vector<std::vector<std::string>>& rows)
    : universe_(std::move(universe)), costs_(std::move(costs)) {
  const std::size_t n = universe_.size();
  if (costs_.size() != n) throw PreconditionError("one cost per attribute is required");
  if (rows.empty()) throw PreconditionError("a model needs at least one legitimate tuple");
  domains_.resize(n);
  std::vector<std::unordered_map<std::string, std::uint32_t>> intern(n);
  tuples_.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != n)
      throw PreconditionError("tuple has " + std::to_string(row.size()) + " values, expected " +
                              std::to_string(n));
    Tuple t(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto [it, fresh] = intern[a].emplace(row[a], static_cast<std::uint32_t>(domains_[a].size()));
      if (fresh) domains_[a].push_back(row[a]);
      t[a] = it->second;
    }
    tuples_.push_back(std::move(t));
  }
}

std::optional<std::pair<std::size_t, std::size_t>> InfoModel::violation(const AttrSet& s,
                                                                         const AttrSet& b) const {
  if (s.universe_size() != universe_.size() || b.universe_size() != universe_.size())
    throw PreconditionError("attribute set is not over the model's universe");
  const std::vector<std::size_t> key_attrs = s.members();
  std::map<std::vector<std::uint32_t>, std::size_t> first_with_key;
  std::vector<std::uint32_t> key(key_attrs.size());
  for (std::size_t i = 0; i < tuples_.size(); ++i) {
    for (std::size_t k = 0; k < key_attrs.size(); ++k) key[k] = tuples_[i][key_attrs[k]];
    auto [it, fresh] = first_with_key.emplace(key, i);
    if (!fresh && !agrees_on(tuples_[it->second], tuples_[i], b))
      return std::make_pair(it->second, i);
  }
  return std::nullopt;
}

InfoModel InfoModel::with_costs(std::vector<ExtendedBudget> costs) const {
  if (costs.size() != universe_.size()) throw PreconditionError("one cost per attribute is required");
  InfoModel m = *this;
  m.costs_ = std::move(costs);
  return m;
}

bool agrees_on(const InfoModel::Tuple& l1, const InfoModel::Tuple& l2, const AttrSet& s) {
  for (std::size_t a : s.members())
    if (l1.at(a) != l2.at(a)) return false;
  return true;
}

namespace detail {

void check_atom_width(const Atom& t, std::size_t n) {
  if (t.lhs.universe_size() != n || t.rhs.universe_size() != n)
    throw PreconditionError("atom is not over the model's universe");
}

std::vector<std::pair<Budget, std::size_t>> affordable_attributes(
    const std::vector<ExtendedBudget>& costs, const AttrSet& lhs, const Budget& budget,
    std::size_t cap) {
  std::vector<std::pair<Budget, std::size_t>> out;
  for (std::size_t a = 0; a < costs.size(); ++a) {
    if (lhs.contains(a) || costs[a].is_infinite() || costs[a].finite() > budget) continue;
    out.emplace_back(costs[a].finite(), a);
  }
  if (out.size() > cap)
    throw CapExceeded(std::to_string(out.size()) + " affordable attributes, above the cap of " +
                      std::to_string(cap));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AttrSet> search_witness(const AttrSet& lhs, const Budget& budget,
                                      const std::vector<std::pair<Budget, std::size_t>>& affordable,
                                      const std::function<bool(const AttrSet&)>& works) {
  struct Candidate {
    Budget cost;
    AttrSet extra;
  };
  const std::size_t n = affordable.size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Candidate> level;
    AttrSet extra(lhs.universe_size());
    auto pick = [&](auto&& self, std::size_t from, std::size_t left, const Budget& cost) -> void {
      if (left == 0) {
        level.push_back(Candidate{cost, extra});
        return;
      }
      for (std::size_t i = from; i + left <= n; ++i) {
        Budget next = cost + affordable[i].first;
        // Sorted ascending, so every later attribute is at least as expensive.
        if (next > budget) break;
        extra.insert(affordable[i].second);
        self(self, i + 1, left - 1, next);
        extra.erase(affordable[i].second);
      }
    };
    pick(pick, 0, k, Budget{});
    if (level.empty()) return std::nullopt;
    std::sort(level.begin(), level.end(), [](const Candidate& x, const Candidate& y) {
      if (x.cost != y.cost) return x.cost < y.cost;
      return x.extra < y.extra;
    });
    for (const Candidate& c : level)
      if (works(lhs | c.extra)) return c.extra;
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

// Inclusion-maximal subsets of `items` with total cost <= budget, as masks.
std::vector<std::uint64_t> maximal_masks(const std::vector<std::pair<Budget, std::size_t>>& items,
                                         const Budget& budget) {
  std::vector<std::uint64_t> out;
  const std::size_t k = items.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Budget cost;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) cost += items[j].first;
    if (cost > budget) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < k && maximal; ++j)
      if (!(mask >> j & 1) && cost + items[j].first <= budget) maximal = false;
    if (maximal) out.push_back(mask);
  }
  return out;
}

constexpr std::size_t kRefutationCap = 20;

}  // namespace

std::optional<ModelRefutation> refute_in_model(const InfoModel& m, const Atom& t,
                                               const EvalLimits& limits) {
  if (eval_atom_model(m, t, limits).holds) return std::nullopt;
  const auto affordable = detail::affordable_attributes(
      m.costs(), t.lhs, t.budget, std::min(limits.max_affordable, kRefutationCap));
  ModelRefutation r;
  for (std::uint64_t mask : maximal_masks(affordable, t.budget)) {
    AttrSet extra(m.universe().size());
    for (std::size_t j = 0; j < affordable.size(); ++j)
      if (mask >> j & 1) extra.insert(affordable[j].second);
    auto pair = m.violation(t.lhs | extra, t.rhs);
    if (!pair) throw std::logic_error("failed atom has a determining affordable set");
    r.entries.push_back(ModelRefutation::Entry{extra, pair->first, pair->second});
  }
  return r;
}

std::optional<std::string> check_model_refutation(const InfoModel& m, const Atom& t,
                                                  const ModelRefutation& r) {
  detail::check_atom_width(t, m.universe().size());
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    const std::string where = "entry " + std::to_string(i) + ": ";
    if (e.extra.universe_size() != m.universe().size()) return where + "set over wrong universe";
    if (set_cost(m, e.extra) > ExtendedBudget(t.budget)) return where + "set is not affordable";
    if (e.first >= m.tuples().size() || e.second >= m.tuples().size())
      return where + "tuple index out of range";
    const auto& l1 = m.tuples()[e.first];
    const auto& l2 = m.tuples()[e.second];
    if (!agrees_on(l1, l2, t.lhs | e.extra)) return where + "tuples disagree on lhs and the set";
    if (agrees_on(l1, l2, t.rhs)) return where + "tuples agree on rhs";
  }
  const auto affordable =
      detail::affordable_attributes(m.costs(), t.lhs, t.budget, kRefutationCap);
  for (std::uint64_t mask : maximal_masks(affordable, t.budget)) {
    AttrSet s(m.universe().size());
    for (std::size_t j = 0; j < affordable.size(); ++j)
      if (mask >> j & 1) s.insert(affordable[j].second);
    bool covered = std::any_of(r.entries.begin(), r.entries.end(), [&](const auto& e) {
      return (s - t.lhs).is_subset_of(e.extra | t.lhs);
    });
    if (!covered) return "affordable set " + s.str(m.universe()) + " is not covered";
  }
  return std::nullopt;
}

std::vector<Budget> budget_grid(const std::vector<ExtendedBudget>& costs, const Budget& cap,
                                std::size_t max_points) {
  std::set<Budget> sums{Budget{}};
  for (const ExtendedBudget& c : costs) {
    if (c.is_infinite() || c.finite() > cap) continue;
    std::vector<Budget> next;
    for (const Budget& s : sums) {
      Budget t = s + c.finite();
      if (t <= cap) next.push_back(std::move(t));
    }
    sums.insert(next.begin(), next.end());
    if (sums.size() > max_points)
      throw CapExceeded("budget grid exceeds " + std::to_string(max_points) + " points");
  }
  return {sums.begin(), sums.end()};
}

std::vector<Atom> mine_dependencies(const InfoModel& m, const Budget& cap, std::size_t max_lhs,
                                    const MiningLimits& limits) {
  const std::size_t n = m.universe().size();
  const std::vector<Budget> grid = budget_grid(m.costs(), cap);
  std::vector<Atom> out;
  std::size_t examined = 0;
  for (std::size_t b = 0; b < n; ++b) {
    const AttrSet rhs(n, {b});
    std::map<AttrSet, std::optional<Budget>> least;
    auto least_budget = [&](const AttrSet& lhs) -> std::optional<Budget> {
      auto holds_at = [&](const Budget& p) {
        return eval_atom_model(m, Atom{lhs, rhs, p}, limits.eval).holds;
      };
      if (!holds_at(grid.back())) return std::nullopt;
      std::size_t lo = 0, hi = grid.size() - 1;
      while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (holds_at(grid[mid])) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      return grid[lo];
    };
    for (std::size_t k = 0; k <= std::min(max_lhs, n - 1); ++k) {
      AttrSet lhs(n);
      auto visit = [&](auto&& self, std::size_t from, std::size_t left) -> void {
        if (left == 0) {
          if (++examined > limits.max_candidates)
            throw CapExceeded("mining examined more than " +
                              std::to_string(limits.max_candidates) + " candidates");
          std::optional<Budget> p = least_budget(lhs);
          least.emplace(lhs, p);
          if (!p) return;
          for (std::size_t x : lhs.members()) {
            AttrSet smaller = lhs;
            smaller.erase(x);
            const auto& q = least.at(smaller);
            if (q && *q <= *p) return;
          }
          out.push_back(Atom{lhs, rhs, *p});
          return;
        }
        for (std::size_t a = from; a < n; ++a) {
          if (a == b) continue;
          lhs.insert(a);
          self(self, a + 1, left - 1);
          lhs.erase(a);
        }
      };
      visit(visit, 0, k);
    }
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;
  auto end_row = [&] {
    if (field_started || !row.empty()) {
      row.push_back(std::move(field));
      rows.push_back(std::move(row));
    }
    row.clear();
    field.clear();
    field_started = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) throw ParseError("csv line " + std::to_string(line) + ": stray quote");
        quoted = true;
        field_started = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (quoted) throw ParseError("csv: unterminated quoted field");
  end_row();
  return rows;
}

InfoModel load_csv_model(std::string_view csv, std::string_view costs) {
  auto rows = parse_csv(csv);
  if (rows.empty()) throw ParseError("csv: missing header row");
  AttributeUniverse universe(rows.front());
  const std::size_t n = universe.size();
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r].size() != n)
      throw ParseError("csv row " + std::to_string(r + 1) + ": " + std::to_string(rows[r].size()) +
                       " fields, expected " + std::to_string(n));

  std::vector<std::optional<ExtendedBudget>> parsed(n);
  std::size_t start = 0, line_no = 0;
  while (start < costs.size()) {
    std::size_t nl = costs.find('\n', start);
    if (nl == std::string_view::npos) nl = costs.size();
    std::string line(costs.substr(start, nl - start));
    start = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    const std::string where = "costs line " + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) throw ParseError(where + "expected name=cost");
    std::string name = trim(line.substr(0, eq));
    auto a = universe.find(name);
    if (!a) throw ParseError(where + "unknown attribute '" + name + "'");
    if (parsed[*a]) throw ParseError(where + "duplicate cost for '" + name + "'");
    try {
      parsed[*a] = ExtendedBudget::parse(trim(line.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  std::vector<ExtendedBudget> cost_list;
  for (std::size_t a = 0; a < n; ++a) {
    if (!parsed[a]) throw ParseError("costs: no cost for '" + universe.name(a) + "'");
    cost_list.push_back(*parsed[a]);
  }
  rows.erase(rows.begin());
  if (rows.empty()) throw ParseError("csv: no data rows");
  return InfoModel(std::move(universe), std::move(cost_list), rows);
}

}  // namespace bcfd
