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

#include <memory>
#include <string>
#include <vector>

#include "bcfd/formula.hpp"
#include "bcfd/hypergraph.hpp"
#include "bcfd/premises.hpp"

namespace bcfd {

/// Derivation tree over the three axioms plus premise leaves. Every node
/// carries the conclusion it claims; check_proof decides whether the claims
/// are justified.
class Proof {
 public:
  enum class Rule { kPremise, kReflexivity, kAugmentation, kTransitivity };

  static Proof premise(Atom a);
  /// Claims lhs |p rhs; justified only when rhs is a subset of lhs.
  static Proof reflexivity(AttrSet lhs, AttrSet rhs, Budget p);
  /// From A |p B claims A+C |p B+C.
  static Proof augmentation(Proof sub, AttrSet with);
  /// From A |p B and B |q C claims A |p+q C.
  static Proof transitivity(Proof left, Proof right);
  /// Arbitrary claim, for proofs read from outside.
  static Proof claimed(Rule rule, Atom conclusion, std::vector<Proof> children = {},
                       AttrSet with = {});

  Rule rule() const { return node_->rule; }
  const Atom& conclusion() const { return node_->conclusion; }
  const std::vector<Proof>& children() const { return node_->children; }
  /// Augmentation set.
  const AttrSet& with() const { return node_->with; }
  std::size_t node_count() const;

 private:
  struct Node {
    Rule rule;
    Atom conclusion;
    std::vector<Proof> children;
    AttrSet with;
  };
  explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string rule_name(Proof::Rule r);

struct ProofCheck {
  bool ok = true;
  /// Dotted path of the first failing node, e.g. "root.left.sub".
  std::string failing_path;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Verifies every node's side condition and that every premise leaf is in
/// `premises`.
ProofCheck check_proof(const Proof& proof, const PremiseSet& premises);

/// Turns a closure trace over the canonical hypergraph of `premises` into a
/// proof of `goal`: one augmented premise per trace step chained by
/// transitivity, a reflexive padding step when the budget exceeds the trace
/// weight, and a reflexive projection onto goal.rhs. Throws
/// PreconditionError when the trace does not support the goal.
Proof build_proof(const PremiseSet& premises, const Atom& goal, const ClosureTrace& trace,
                  const EdgeSet& purchase);

/// A derived rule instance: the proof concludes the rule's consequent from
/// the listed antecedents.
struct DerivedRule {
  std::vector<Atom> premises;
  Proof proof;
};

/// A |p C+D  gives  A+B |p C.
DerivedRule derive_weakening(const Budget& p, const AttrSet& a, const AttrSet& b,
                             const AttrSet& c, const AttrSet& d);
/// A |p B  gives  A |q B for p <= q. Throws PreconditionError if q < p.
DerivedRule derive_monotonicity(const AttrSet& a, const AttrSet& b, const Budget& p,
                                const Budget& q);
/// A |p B and C |q D give A+C |p+q B+D.
DerivedRule derive_general_augmentation(const AttrSet& a, const AttrSet& b, const AttrSet& c,
                                        const AttrSet& d, const Budget& p, const Budget& q);

}  // namespace bcfd
