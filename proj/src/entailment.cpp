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

#include "bcfd/entailment.hpp"

#include <algorithm>

#include "bcfd/error.hpp"

namespace bcfd {

Hypergraph canonical_hypergraph(const PremiseSet& premises) {
  std::vector<Edge> edges;
  edges.reserve(premises.size());
  for (std::size_t i = 0; i < premises.size(); ++i) {
    const Atom& a = premises.atoms()[i];
    edges.push_back(Edge{a.lhs, a.rhs, a.budget, premises.label(i)});
  }
  return Hypergraph(premises.universe(), std::move(edges));
}

PremiseSet premises_of(const Hypergraph& h) {
  std::vector<Atom> atoms;
  std::vector<std::string> labels;
  for (const Edge& e : h.edges()) {
    atoms.push_back(Atom{e.tails, e.heads, e.weight});
    labels.push_back(e.label);
  }
  return PremiseSet(h.vertices(), std::move(atoms), std::move(labels));
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Hypergraph& h, const AttrSet& a, const AttrSet& b) : h_(h), a_(a), b_(b) {
    free_ = h.no_edges();
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (h.edge(e).weight.is_zero()) {
        free_.insert(e);
      } else {
        order_.push_back(e);
      }
    }
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId x, EdgeId y) {
      return h.edge(x).weight < h.edge(y).weight;
    });
    suffix_.assign(order_.size() + 1, h.no_edges());
    for (std::size_t i = order_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i].insert(order_[i]);
    }
  }

  std::optional<Purchase> solve() {
    if (!b_.is_subset_of(closure(h_, a_, h_.all_edges()))) return std::nullopt;
    best_ = greedy();
    search(0, free_, Budget{});
    return best_;
  }

 private:
  // Repeatedly buys the cheapest enabled edge that adds something.
  Purchase greedy() const {
    EdgeSet chosen = free_;
    Budget cost;
    while (true) {
      AttrSet reached = closure(h_, a_, chosen);
      if (b_.is_subset_of(reached)) return Purchase{cost, chosen};
      bool bought = false;
      for (EdgeId e : order_) {
        if (chosen.contains(e)) continue;
        const Edge& edge = h_.edge(e);
        if (edge.tails.is_subset_of(reached) && !edge.heads.is_subset_of(reached)) {
          chosen.insert(e);
          cost += edge.weight;
          bought = true;
          break;
        }
      }
      if (!bought) throw std::logic_error("greedy purchase stalled on a reachable goal");
    }
  }

  void search(std::size_t i, const EdgeSet& chosen, const Budget& cost) {
    AttrSet reached = closure(h_, a_, chosen);
    if (b_.is_subset_of(reached)) {
      if (cost < best_->cost) best_ = Purchase{cost, chosen};
      return;
    }
    // Any completion buys at least one more edge, the cheapest being order_[i].
    if (i >= order_.size() || cost + h_.edge(order_[i]).weight >= best_->cost) return;
    if (!b_.is_subset_of(closure(h_, a_, chosen | suffix_[i]))) return;

    EdgeId e = order_[i];
    const Edge& edge = h_.edge(e);
    // An edge whose heads are already reached can never help later either.
    if (!edge.heads.is_subset_of(reached)) {
      EdgeSet with = chosen;
      with.insert(e);
      search(i + 1, with, cost + edge.weight);
    }
    search(i + 1, chosen, cost);
  }

  const Hypergraph& h_;
  const AttrSet& a_;
  const AttrSet& b_;
  EdgeSet free_;
  std::vector<EdgeId> order_;
  std::vector<EdgeSet> suffix_;
  std::optional<Purchase> best_;
};

void check_limits(const Hypergraph& h, const SearchLimits& limits) {
  if (h.edge_count() > limits.max_edges)
    throw CapExceeded("hypergraph has " + std::to_string(h.edge_count()) +
                      " edges, above the cap of " + std::to_string(limits.max_edges));
}

}  // namespace

std::optional<Purchase> min_budget(const Hypergraph& h, const AttrSet& a, const AttrSet& b,
                                   const SearchLimits& limits) {
  check_limits(h, limits);
  return BranchAndBound(h, a, b).solve();
}

std::optional<Purchase> min_budget_bruteforce(const Hypergraph& h, const AttrSet& a,
                                              const AttrSet& b, std::size_t max_edges) {
  const std::size_t m = h.edge_count();
  if (m > max_edges || m >= 63)
    throw CapExceeded("brute force over " + std::to_string(m) + " edges exceeds the cap");
  std::optional<Purchase> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeSet f = h.no_edges();
    Budget cost;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) {
        f.insert(e);
        cost += h.edge(e).weight;
      }
    }
    if (best && cost >= best->cost) continue;
    if (b.is_subset_of(closure(h, a, f))) best = Purchase{cost, f};
  }
  return best;
}

bool holds(const Hypergraph& h, const Atom& atom, const SearchLimits& limits) {
  auto best = min_budget(h, atom.lhs, atom.rhs, limits);
  return best && best->cost <= atom.budget;
}

bool holds(const Hypergraph& h, const Formula& f, const SearchLimits& limits) {
  return evaluate_with(f, [&](const Atom& a) { return holds(h, a, limits); });
}

std::vector<EdgeSet> maximal_affordable_sets(const Hypergraph& h, const Budget& budget,
                                             std::size_t max_sets) {
  EdgeSet free = h.no_edges();
  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Budget& w = h.edge(e).weight;
    if (w.is_zero()) {
      free.insert(e);
    } else if (w <= budget) {
      candidates.push_back(e);
    }
  }
  std::vector<EdgeSet> out;
  EdgeSet chosen = free;
  auto recurse = [&](auto&& self, std::size_t i, const Budget& left) -> void {
    if (i == candidates.size()) {
      for (EdgeId e : candidates)
        if (!chosen.contains(e) && h.edge(e).weight <= left) return;
      out.push_back(chosen);
      if (out.size() > max_sets)
        throw CapExceeded("more than " + std::to_string(max_sets) + " maximal purchase sets");
      return;
    }
    EdgeId e = candidates[i];
    const Budget& w = h.edge(e).weight;
    if (w <= left) {
      chosen.insert(e);
      self(self, i + 1, left - w);
      chosen.erase(e);
    }
    self(self, i + 1, left);
  };
  recurse(recurse, 0, budget);
  return out;
}

Refutation refute(const Hypergraph& h, const Atom& atom, std::size_t max_sets) {
  Refutation r;
  if (auto best = min_budget(h, atom.lhs, atom.rhs)) {
    if (best->cost <= atom.budget) throw PreconditionError("atom holds; nothing to refute");
    r.min_budget = best->cost;
  }
  for (EdgeSet& f : maximal_affordable_sets(h, atom.budget, max_sets)) {
    Cut cut = reachability_cut(h, atom.lhs, f);
    std::size_t root = *(atom.rhs & cut.right).first();
    r.cuts.push_back(PurchaseCut{std::move(f), std::move(cut), root});
  }
  return r;
}

std::optional<std::string> check_refutation(const Hypergraph& h, const Atom& atom,
                                            const Refutation& r, std::size_t max_edges) {
  if (r.min_budget && *r.min_budget <= atom.budget)
    return "claimed minimum budget does not exceed the atom's budget";
  for (std::size_t i = 0; i < r.cuts.size(); ++i) {
    const PurchaseCut& pc = r.cuts[i];
    const std::string where = "cut " + std::to_string(i) + ": ";
    if (pc.purchase.universe_size() != h.edge_count()) return where + "purchase over wrong edge set";
    if (weight(h, pc.purchase) > atom.budget) return where + "purchase is not affordable";
    if (pc.cut.left.universe_size() != h.vertex_count() ||
        pc.cut.right.universe_size() != h.vertex_count() || pc.cut.left.intersects(pc.cut.right) ||
        (pc.cut.left | pc.cut.right) != h.all_vertices())
      return where + "not a partition";
    if (pc.cut.left != closure(h, atom.lhs, pc.purchase))
      return where + "left side is not the closure of the purchase";
    if (!atom.rhs.contains(pc.root) || !pc.cut.right.contains(pc.root))
      return where + "root is not an unreached goal vertex";
    if (crossing_edges(h, pc.cut).intersects(pc.purchase)) return where + "a purchased edge crosses";
  }

  std::vector<EdgeId> candidates;
  EdgeSet free = h.no_edges();
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Budget& w = h.edge(e).weight;
    if (w.is_zero()) {
      free.insert(e);
    } else if (w <= atom.budget) {
      candidates.push_back(e);
    }
  }
  if (candidates.size() > max_edges || candidates.size() >= 63)
    throw CapExceeded("refutation coverage check over too many affordable edges");
  const std::size_t k = candidates.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    EdgeSet s = free;
    Budget cost;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask >> j & 1) {
        s.insert(candidates[j]);
        cost += h.edge(candidates[j]).weight;
      }
    }
    if (cost > atom.budget) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < k && maximal; ++j)
      if (!(mask >> j & 1) && cost + h.edge(candidates[j]).weight <= atom.budget) maximal = false;
    if (!maximal) continue;
    bool covered = std::any_of(r.cuts.begin(), r.cuts.end(),
                               [&](const PurchaseCut& pc) { return s.is_subset_of(pc.purchase); });
    if (!covered) return "an affordable purchase set is not covered by any cut";
  }
  return std::nullopt;
}

EntailmentAnswer entails(const PremiseSet& premises, const Atom& goal, const SearchLimits& limits) {
  if (goal.lhs.universe_size() != premises.universe().size() ||
      goal.rhs.universe_size() != premises.universe().size())
    throw PreconditionError("goal is not over the premises' universe");
  Hypergraph h = canonical_hypergraph(premises);
  EntailmentAnswer answer;
  auto best = min_budget(h, goal.lhs, goal.rhs, limits);
  if (best && best->cost <= goal.budget) {
    answer.entailed = true;
    ClosureTrace trace = closure_trace(h, goal.lhs, best->edges);
    answer.proof = build_proof(premises, goal, trace, best->edges);
    answer.purchase = std::move(best);
    return answer;
  }
  answer.refutation = refute(h, goal);
  return answer;
}

namespace {

void check_atom_cap(const std::vector<Atom>& as, std::size_t max_atoms) {
  if (as.size() > max_atoms || as.size() >= 63)
    throw CapExceeded("formula has " + std::to_string(as.size()) +
                      " distinct atoms, above the cap of " + std::to_string(max_atoms));
}

Assignment assignment_of(const std::vector<Atom>& as, std::uint64_t mask) {
  Assignment sigma;
  for (std::size_t i = 0; i < as.size(); ++i) sigma.emplace(as[i], (mask >> i & 1) != 0);
  return sigma;
}

std::vector<Atom> true_atoms(const std::vector<Atom>& as, std::uint64_t mask) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < as.size(); ++i)
    if (mask >> i & 1) out.push_back(as[i]);
  return out;
}

}  // namespace

SatAnswer decide_satisfiable(const Formula& f, const AttributeUniverse& u, std::size_t max_atoms,
                             const SearchLimits& limits) {
  const std::vector<Atom> as = atoms(f);
  check_atom_cap(as, max_atoms);
  for (const Atom& a : as)
    if (a.lhs.universe_size() != u.size()) throw PreconditionError("formula is not over the universe");

  const std::size_t n = as.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Assignment sigma = assignment_of(as, mask);
    if (!evaluate(f, sigma)) continue;
    Hypergraph h = canonical_hypergraph(PremiseSet(u, true_atoms(as, mask)));
    bool realizable = true;
    for (std::size_t i = 0; i < n && realizable; ++i)
      if (!(mask >> i & 1) && holds(h, as[i], limits)) realizable = false;
    if (realizable) return SatAnswer{true, std::move(sigma), std::move(h)};
  }
  return SatAnswer{};
}

SatAnswer decide_valid(const Formula& f, const AttributeUniverse& u, std::size_t max_atoms,
                       const SearchLimits& limits) {
  SatAnswer counter = decide_satisfiable(Formula::negation(f), u, max_atoms, limits);
  counter.verdict = !counter.verdict;
  return counter;
}

std::vector<BlockedAssignment> unsatisfiability_certificate(const Formula& f,
                                                            const AttributeUniverse& u,
                                                            std::size_t max_atoms,
                                                            const SearchLimits& limits) {
  const std::vector<Atom> as = atoms(f);
  check_atom_cap(as, max_atoms);
  std::vector<BlockedAssignment> cert;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << as.size()); ++mask) {
    Assignment sigma = assignment_of(as, mask);
    if (!evaluate(f, sigma)) continue;
    PremiseSet premises(u, true_atoms(as, mask));
    bool blocked = false;
    for (std::size_t i = 0; i < as.size() && !blocked; ++i) {
      if (mask >> i & 1) continue;
      EntailmentAnswer answer = entails(premises, as[i], limits);
      if (!answer.entailed) continue;
      cert.push_back(BlockedAssignment{std::move(sigma), as[i], std::move(*answer.proof)});
      blocked = true;
    }
    if (!blocked) throw PreconditionError("formula is satisfiable");
  }
  return cert;
}

std::optional<std::string> check_unsatisfiability_certificate(
    const Formula& f, const AttributeUniverse& u, const std::vector<BlockedAssignment>& cert,
    std::size_t max_atoms) {
  const std::vector<Atom> as = atoms(f);
  check_atom_cap(as, max_atoms);
  std::size_t next = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << as.size()); ++mask) {
    Assignment sigma = assignment_of(as, mask);
    if (!evaluate(f, sigma)) continue;
    const std::string where = "assignment " + std::to_string(mask) + ": ";
    if (next >= cert.size() || cert[next].assignment != sigma) return where + "not covered";
    const BlockedAssignment& entry = cert[next++];
    auto it = sigma.find(entry.blocked);
    if (it == sigma.end() || it->second) return where + "blocked atom is not a false atom";
    if (!(entry.proof.conclusion() == entry.blocked)) return where + "proof concludes another atom";
    if (ProofCheck pc = check_proof(entry.proof, PremiseSet(u, true_atoms(as, mask))); !pc)
      return where + "proof fails at " + pc.failing_path + ": " + pc.reason;
  }
  if (next != cert.size()) return "certificate lists assignments that do not satisfy the formula";
  return std::nullopt;
}

}  // namespace bcfd
