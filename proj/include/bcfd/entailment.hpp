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

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bcfd/formula.hpp"
#include "bcfd/hypergraph.hpp"
#include "bcfd/premises.hpp"
#include "bcfd/proofs.hpp"

namespace bcfd {

/// One edge <A,p,B> per premise A |p B, in premise order.
Hypergraph canonical_hypergraph(const PremiseSet& premises);
/// The premises in(e) |w(e) out(e) of every edge, in edge order.
PremiseSet premises_of(const Hypergraph& h);

/// A set of edges and its total weight.
struct Purchase {
  Budget cost;
  EdgeSet edges;
};

struct SearchLimits {
  std::size_t max_edges = std::numeric_limits<std::size_t>::max();
};

/// Cheapest edge set F with b inside closure(a, F); nullopt when b is not
/// reachable even with every edge. Exact branch-and-bound; exponential in
/// the worst case. Throws CapExceeded when the hypergraph has more than
/// `limits.max_edges` edges.
std::optional<Purchase> min_budget(const Hypergraph& h, const AttrSet& a, const AttrSet& b,
                                   const SearchLimits& limits = {});

/// Same contract by enumerating all 2^|E| edge subsets. Throws CapExceeded
/// above `max_edges`.
std::optional<Purchase> min_budget_bruteforce(const Hypergraph& h, const AttrSet& a,
                                              const AttrSet& b, std::size_t max_edges = 20);

/// Hypergraph semantics of an atom: some F with w(F) <= p reaches rhs.
bool holds(const Hypergraph& h, const Atom& atom, const SearchLimits& limits = {});
/// Hypergraph semantics of a formula; atoms must be over h's vertices.
bool holds(const Hypergraph& h, const Formula& f, const SearchLimits& limits = {});

/// An affordable purchase set together with the cut its closure induces and
/// a goal vertex left outside.
struct PurchaseCut {
  EdgeSet purchase;
  Cut cut;
  std::size_t root;
};

/// Why an atom fails in a hypergraph: its exact minimum budget (nullopt when
/// unreachable) and, for every inclusion-maximal affordable purchase set,
/// the reachability cut leaving part of rhs on the right. Every affordable
/// set is contained in a listed one, so closure monotonicity covers them all.
struct Refutation {
  std::optional<Budget> min_budget;
  std::vector<PurchaseCut> cuts;
};

/// Inclusion-maximal edge sets of weight <= budget. Zero-weight edges are in
/// every one. Throws CapExceeded beyond `max_sets` results.
std::vector<EdgeSet> maximal_affordable_sets(const Hypergraph& h, const Budget& budget,
                                             std::size_t max_sets = 4096);

/// Throws PreconditionError when the atom holds in `h`.
Refutation refute(const Hypergraph& h, const Atom& atom, std::size_t max_sets = 4096);

/// Re-validates a refutation: each cut is the reachability cut of an
/// affordable set, the root is an uncovered goal vertex, no purchased edge
/// crosses, and (by exhaustive enumeration over at most `max_edges`
/// positive-weight affordable edges) every affordable set is covered.
/// Returns the first problem found, or nullopt.
std::optional<std::string> check_refutation(const Hypergraph& h, const Atom& atom,
                                            const Refutation& r, std::size_t max_edges = 20);

struct EntailmentAnswer {
  bool entailed = false;
  /// Present when entailed.
  std::optional<Proof> proof;
  std::optional<Purchase> purchase;
  /// Present when not entailed.
  std::optional<Refutation> refutation;
};

/// Decides premises |- goal through the canonical hypergraph: entailed iff
/// its minimum budget for (goal.lhs, goal.rhs) is at most goal.budget.
EntailmentAnswer entails(const PremiseSet& premises, const Atom& goal,
                         const SearchLimits& limits = {});

struct SatAnswer {
  /// Satisfiable (for decide_satisfiable) or valid (for decide_valid).
  bool verdict = false;
  /// Satisfying (resp. falsifying) realizable assignment.
  std::optional<Assignment> assignment;
  /// Canonical hypergraph of the assignment's true atoms.
  std::optional<Hypergraph> witness;
};

/// Enumerates truth assignments over atoms(f); an assignment is realizable
/// when no false atom is entailed by the true ones. Throws CapExceeded when
/// f has more than `max_atoms` distinct atoms.
SatAnswer decide_satisfiable(const Formula& f, const AttributeUniverse& u,
                             std::size_t max_atoms = 20, const SearchLimits& limits = {});
/// Valid iff the negation is unsatisfiable.
SatAnswer decide_valid(const Formula& f, const AttributeUniverse& u, std::size_t max_atoms = 20,
                       const SearchLimits& limits = {});

/// One propositional model of a formula that no hypergraph realizes: under
/// `assignment` the true atoms entail `blocked`, which the assignment makes
/// false; `proof` derives it from the true atoms.
struct BlockedAssignment {
  Assignment assignment;
  Atom blocked;
  Proof proof;
};

/// Certificate that f is unsatisfiable: one entry per assignment making f
/// true, in ascending mask order. Throws PreconditionError when f is
/// satisfiable and CapExceeded as decide_satisfiable does.
std::vector<BlockedAssignment> unsatisfiability_certificate(const Formula& f,
                                                            const AttributeUniverse& u,
                                                            std::size_t max_atoms = 20,
                                                            const SearchLimits& limits = {});
/// Re-enumerates the assignments and checks each entry's proof. Returns the
/// first problem found.
std::optional<std::string> check_unsatisfiability_certificate(
    const Formula& f, const AttributeUniverse& u, const std::vector<BlockedAssignment>& cert,
    std::size_t max_atoms = 20);

}  // namespace bcfd
