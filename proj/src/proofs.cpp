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

#include "bcfd/proofs.hpp"

#include "bcfd/error.hpp"

namespace bcfd {

Proof Proof::premise(Atom a) {
  return Proof(std::make_shared<const Node>(Node{Rule::kPremise, std::move(a), {}, {}}));
}

Proof Proof::reflexivity(AttrSet lhs, AttrSet rhs, Budget p) {
  return Proof(std::make_shared<const Node>(
      Node{Rule::kReflexivity, Atom{std::move(lhs), std::move(rhs), std::move(p)}, {}, {}}));
}

Proof Proof::augmentation(Proof sub, AttrSet with) {
  const Atom& s = sub.conclusion();
  Atom concl{s.lhs | with, s.rhs | with, s.budget};
  return Proof(std::make_shared<const Node>(
      Node{Rule::kAugmentation, std::move(concl), {std::move(sub)}, std::move(with)}));
}

Proof Proof::transitivity(Proof left, Proof right) {
  Atom concl{left.conclusion().lhs, right.conclusion().rhs,
             left.conclusion().budget + right.conclusion().budget};
  return Proof(std::make_shared<const Node>(
      Node{Rule::kTransitivity, std::move(concl), {std::move(left), std::move(right)}, {}}));
}

Proof Proof::claimed(Rule rule, Atom conclusion, std::vector<Proof> children, AttrSet with) {
  return Proof(std::make_shared<const Node>(
      Node{rule, std::move(conclusion), std::move(children), std::move(with)}));
}

std::size_t Proof::node_count() const {
  std::size_t n = 1;
  for (const Proof& c : children()) n += c.node_count();
  return n;
}

std::string rule_name(Proof::Rule r) {
  switch (r) {
    case Proof::Rule::kPremise:
      return "Premise";
    case Proof::Rule::kReflexivity:
      return "Refl";
    case Proof::Rule::kAugmentation:
      return "Aug";
    case Proof::Rule::kTransitivity:
      return "Trans";
  }
  return "?";
}

namespace {

ProofCheck fail(const std::string& path, std::string reason) {
  return ProofCheck{false, path, std::move(reason)};
}

bool same_universe(const Atom& a, std::size_t n) {
  return a.lhs.universe_size() == n && a.rhs.universe_size() == n;
}

ProofCheck check_node(const Proof& p, const PremiseSet& premises, const std::string& path) {
  const Atom& c = p.conclusion();
  const std::size_t n = premises.universe().size();
  if (!same_universe(c, n)) return fail(path, "conclusion is over a different universe");
  switch (p.rule()) {
    case Proof::Rule::kPremise:
      if (!p.children().empty()) return fail(path, "premise leaf has children");
      if (!premises.contains(c)) return fail(path, "not a premise");
      return {};
    case Proof::Rule::kReflexivity:
      if (!p.children().empty()) return fail(path, "reflexivity leaf has children");
      if (!c.rhs.is_subset_of(c.lhs)) return fail(path, "reflexivity needs rhs within lhs");
      return {};
    case Proof::Rule::kAugmentation: {
      if (p.children().size() != 1) return fail(path, "augmentation needs one premise");
      if (p.with().universe_size() != n) return fail(path, "augmentation set over a different universe");
      const Atom& s = p.children()[0].conclusion();
      if (!same_universe(s, n)) return fail(path + ".sub", "conclusion is over a different universe");
      if (c.budget != s.budget) return fail(path, "augmentation changed the budget");
      if (c.lhs != (s.lhs | p.with()) || c.rhs != (s.rhs | p.with()))
        return fail(path, "augmentation conclusion is not the augmented premise");
      return check_node(p.children()[0], premises, path + ".sub");
    }
    case Proof::Rule::kTransitivity: {
      if (p.children().size() != 2) return fail(path, "transitivity needs two premises");
      const Atom& l = p.children()[0].conclusion();
      const Atom& r = p.children()[1].conclusion();
      if (!same_universe(l, n) || !same_universe(r, n))
        return fail(path, "premise is over a different universe");
      if (l.rhs != r.lhs) return fail(path, "transitivity middle sets differ");
      if (c.lhs != l.lhs || c.rhs != r.rhs) return fail(path, "transitivity endpoints do not match");
      if (c.budget != l.budget + r.budget) return fail(path, "transitivity budget is not the sum");
      if (auto lc = check_node(p.children()[0], premises, path + ".left"); !lc) return lc;
      return check_node(p.children()[1], premises, path + ".right");
    }
  }
  return fail(path, "unknown rule");
}

}  // namespace

ProofCheck check_proof(const Proof& proof, const PremiseSet& premises) {
  return check_node(proof, premises, "root");
}

Proof build_proof(const PremiseSet& premises, const Atom& goal, const ClosureTrace& trace,
                  const EdgeSet& purchase) {
  if (trace.sets.empty() || trace.edges.size() + 1 != trace.sets.size())
    throw PreconditionError("malformed closure trace");
  if (trace.sets.front() != goal.lhs) throw PreconditionError("trace does not start at goal.lhs");
  if (!goal.rhs.is_subset_of(trace.final_set()))
    throw PreconditionError("trace does not reach goal.rhs");

  Budget spent;
  for (EdgeId e : purchase.members()) {
    if (e >= premises.size()) throw PreconditionError("purchase refers to an unknown premise");
    spent += premises.atoms()[e].budget;
  }
  if (spent > goal.budget) throw PreconditionError("purchase exceeds the goal budget");

  if (trace.edges.empty()) return Proof::reflexivity(goal.lhs, goal.rhs, goal.budget);

  // acc proves goal.lhs |s A_m after m-1 steps.
  std::optional<Proof> acc;
  Budget trace_weight;
  for (std::size_t i = 0; i < trace.edges.size(); ++i) {
    EdgeId e = trace.edges[i];
    if (!purchase.contains(e)) throw PreconditionError("trace uses an edge outside the purchase");
    const Atom& premise = premises.atoms()[e];
    if (!premise.lhs.is_subset_of(trace.sets[i]))
      throw PreconditionError("trace step fires a premise that is not enabled");
    // in(f) |w out(f)  ->  A_m |w A_{m+1}  since in(f) is inside A_m.
    Proof step = Proof::augmentation(Proof::premise(premise), trace.sets[i]);
    acc = acc ? Proof::transitivity(std::move(*acc), std::move(step)) : std::move(step);
    trace_weight += premise.budget;
  }

  Proof result = std::move(*acc);
  if (trace_weight < goal.budget) {
    result = Proof::transitivity(Proof::reflexivity(goal.lhs, goal.lhs, goal.budget - trace_weight),
                                 std::move(result));
  }
  if (goal.rhs != trace.final_set()) {
    result = Proof::transitivity(std::move(result),
                                 Proof::reflexivity(trace.final_set(), goal.rhs, Budget{}));
  }
  return result;
}

DerivedRule derive_weakening(const Budget& p, const AttrSet& a, const AttrSet& b,
                             const AttrSet& c, const AttrSet& d) {
  Atom antecedent{a, c | d, p};
  // A |p C,D  ->  A,B |p B,C,D ;  B,C,D |0 C ;  transitivity.
  Proof augmented = Proof::augmentation(Proof::premise(antecedent), b);
  Proof projection = Proof::reflexivity(b | c | d, c, Budget{});
  return DerivedRule{{antecedent}, Proof::transitivity(std::move(augmented), std::move(projection))};
}

DerivedRule derive_monotonicity(const AttrSet& a, const AttrSet& b, const Budget& p,
                                const Budget& q) {
  if (q < p) throw PreconditionError("monotonicity needs p <= q");
  Atom antecedent{a, b, p};
  Proof pad = Proof::reflexivity(b, b, q - p);
  return DerivedRule{{antecedent}, Proof::transitivity(Proof::premise(antecedent), std::move(pad))};
}

DerivedRule derive_general_augmentation(const AttrSet& a, const AttrSet& b, const AttrSet& c,
                                        const AttrSet& d, const Budget& p, const Budget& q) {
  Atom first{a, b, p};
  Atom second{c, d, q};
  // A |p B -> A,C |p B,C ;  C |q D -> B,C |q B,D ;  transitivity.
  Proof left = Proof::augmentation(Proof::premise(first), c);
  Proof right = Proof::augmentation(Proof::premise(second), b);
  return DerivedRule{{first, second}, Proof::transitivity(std::move(left), std::move(right))};
}

}  // namespace bcfd
