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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bcfd/attributes.hpp"
#include "bcfd/budget.hpp"
#include "bcfd/formula.hpp"
#include "bcfd/gf2.hpp"
#include "bcfd/hypergraph.hpp"
#include "bcfd/infomodel.hpp"
#include "bcfd/proofs.hpp"

namespace bcfd {

enum class PathKind { kVertex, kEdge };

/// Alternating vertex and edge ids ending at a vertex: <v0,e1,v1,...,en,vn>
/// when vertex-initiated, <e1,v1,...,en,vn> when edge-initiated.
struct Path {
  PathKind kind = PathKind::kVertex;
  std::vector<std::size_t> items;

  static Path vertex(std::size_t v) { return Path{PathKind::kVertex, {v}}; }

  std::size_t origin() const { return items.front(); }
  std::size_t last_vertex() const { return items.back(); }
  /// Number of edges on the path.
  std::size_t length() const;
  /// <v1,e2,...,vn> of an edge-initiated path.
  Path tail() const;
  /// <u,e1,v1,...,vn> of an edge-initiated path.
  Path through(std::size_t u) const;
  std::string str(const Hypergraph& h) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Checks the adjacency conditions against h.
bool is_valid_path(const Hypergraph& h, const Path& p);

/// The informational model built from a hypergraph: one attribute per vertex
/// (named `v:<name>`, priced +inf) followed by one per edge (`e:<name>`,
/// priced at its weight). Attribute i < |V| is vertex i.
class PathModel {
 public:
  /// Throws PreconditionError when depth is 0.
  PathModel(Hypergraph h, std::size_t depth);

  const Hypergraph& hypergraph() const { return h_; }
  const AttributeUniverse& universe() const { return universe_; }
  const std::vector<ExtendedBudget>& costs() const { return costs_; }
  std::size_t depth() const { return depth_; }

  bool is_vertex_attribute(std::size_t a) const { return a < h_.vertex_count(); }
  std::size_t edge_attribute(EdgeId e) const { return h_.vertex_count() + e; }

 private:
  Hypergraph h_;
  AttributeUniverse universe_;
  std::vector<ExtendedBudget> costs_;
  std::size_t depth_;
};

/// 2(|V|+|E|)+2.
std::size_t default_depth(const Hypergraph& h);

PathModel synthesize_model(Hypergraph h, std::optional<std::size_t> depth = std::nullopt);

/// Paths initiated at a model attribute with at most maxlen edges, in
/// depth-first order (edges then heads ascending). Throws CapExceeded past
/// `max_paths`.
std::vector<Path> enumerate_paths(const PathModel& pm, std::size_t origin_attribute,
                                  std::size_t maxlen, std::size_t max_paths = 1 << 20);
std::vector<Path> enumerate_paths(const Hypergraph& h, PathKind kind, std::size_t origin,
                                  std::size_t maxlen, std::size_t max_paths = 1 << 20);

/// A cut, a root on its right side, and for every non-crossing edge with a
/// head on the right, the least tail on the right (the one the inverted tree
/// expands through at every occurrence of that edge).
struct ChoiceFunction {
  Cut cut;
  std::size_t root = 0;
  EdgeSet crossing;
  std::vector<std::optional<std::size_t>> tail_choice;
};

/// Throws PreconditionError when root is not on the right side.
ChoiceFunction choice_function(const Hypergraph& h, const Cut& c, std::size_t root);

/// Membership in the cut-limited inverted tree: the path ends at the root and
/// every edge on it, except the first edge of an edge-initiated path, is
/// non-crossing and entered from its chosen tail. The path must be valid.
bool tree_membership(const Path& p, const ChoiceFunction& cf);

/// A legitimate vector given by a coordinate oracle: zero, or the flip of
/// zero along an inverted tree, optionally with extra toggled coordinates.
class SymbolicVector {
 public:
  static SymbolicVector zero() { return SymbolicVector(); }
  static SymbolicVector flip(ChoiceFunction cf);

  /// Flips one more coordinate; used to build deliberately broken vectors.
  SymbolicVector& toggle(const Path& p);

  /// Coordinate value of the attribute where p is initiated, at p.
  bool value(const Path& p) const;
  const std::optional<ChoiceFunction>& choice() const { return choice_; }

 private:
  std::optional<ChoiceFunction> choice_;
  std::set<Path> toggled_;
};

inline SymbolicVector flip_vector(ChoiceFunction cf) { return SymbolicVector::flip(std::move(cf)); }

struct VerifyOptions {
  std::size_t max_len = 6;
  /// Random path walks instead of exhaustive enumeration when set.
  std::optional<std::uint64_t> seed;
  std::size_t samples = 10000;
  std::size_t max_paths = 1 << 20;
};

/// Outcome of checking the defining sum equation on edge-initiated paths.
struct EquationReport {
  std::size_t checked = 0;
  /// Paths outside the tree, in the tree through a crossing first edge, and
  /// in the tree through a non-crossing one. Without a tree all are outside.
  std::array<std::size_t, 3> cases{};
  std::vector<Path> violations;
  bool ok() const { return violations.empty(); }
};

/// For each edge-initiated path <e1,v1,...,vn> checked:
/// f_e1(path) + sum over u in in(e1) of f_u(<u,e1,...>) = f_v1(<v1,...>) mod 2.
/// Exhaustive up to max_len edges, or random walks when a seed is given.
/// Violations are sorted.
EquationReport verify_equations_sampled(const SymbolicVector& v, const PathModel& pm,
                                        const VerifyOptions& options = {});

/// A finite legitimate-vector space: every path of an acyclic hypergraph is a
/// coordinate and the legitimate vectors are the solutions of all sum
/// equations, kept as a basis.
class LinearModel {
 public:
  LinearModel(AttributeUniverse universe, std::vector<ExtendedBudget> costs,
              std::vector<Path> coordinates, std::vector<std::vector<std::size_t>> coordinates_of,
              std::vector<gf2::Row> basis, std::size_t equation_count);

  const AttributeUniverse& universe() const { return universe_; }
  const std::vector<ExtendedBudget>& costs() const { return costs_; }
  const ExtendedBudget& cost(std::size_t a) const { return costs_.at(a); }
  const std::vector<Path>& coordinates() const { return coordinates_; }
  const std::vector<std::size_t>& coordinates_of(std::size_t a) const { return coordinates_of_.at(a); }
  const std::vector<gf2::Row>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t equation_count() const { return equation_count_; }

  /// Every legitimate vector vanishing on the coordinates of s vanishes on
  /// those of b: rank(G_s) = rank(G_{s+b}) for the basis matrix G.
  bool determines(const AttrSet& s, const AttrSet& b) const;

  LinearModel with_costs(std::vector<ExtendedBudget> costs) const;

  /// All 2^dimension legitimate vectors as explicit tuples; an attribute's
  /// value is the bit string of its coordinates ("-" when it has none).
  /// Throws CapExceeded above max_dimension.
  InfoModel to_info_model(std::size_t max_dimension = 12) const;

 private:
  AttributeUniverse universe_;
  std::vector<ExtendedBudget> costs_;
  std::vector<Path> coordinates_;
  std::vector<std::vector<std::size_t>> coordinates_of_;
  std::vector<gf2::Row> basis_;
  std::size_t equation_count_;
};

/// Throws PreconditionError on a cyclic hypergraph and CapExceeded when the
/// hypergraph has more than max_paths paths.
LinearModel materialize_acyclic(const PathModel& pm, std::size_t max_paths = 4096);

/// Dependency a+c -> b over the span of `basis`, where each argument lists
/// coordinate columns.
bool subspace_fd_check(const std::vector<gf2::Row>& basis, const std::vector<std::size_t>& a,
                       const std::vector<std::size_t>& b, const std::vector<std::size_t>& c);

/// Vertex-level atom or formula lifted to the path model's universe.
Atom lift_atom(const Atom& t, const PathModel& pm);

/// Mechanical checks on one (zero, flip) witness pair.
struct WitnessCheck {
  /// Left-side vertex coordinates are zero on every checked path.
  bool left_unflipped = false;
  /// Non-crossing edge coordinates (the purchase among them) are zero.
  bool non_crossing_unflipped = false;
  /// The flip is 1 at <root>.
  bool root_flipped = false;
  EquationReport zero_equations;
  EquationReport flip_equations;
  bool ok() const {
    return left_unflipped && non_crossing_unflipped && root_flipped && zero_equations.ok() &&
           flip_equations.ok();
  }
};

struct FalseAtomWitness {
  EdgeSet purchase;
  Cut cut;
  std::size_t root = 0;
  ChoiceFunction choice;
  WitnessCheck check;
};

struct AtomFinding {
  Atom atom;
  bool holds = false;
  /// Least budget reaching the rhs; nullopt when unreachable.
  std::optional<Budget> min_budget;
  /// From the hypergraph's edges taken as premises, when the atom holds.
  std::optional<Proof> proof;
  /// One per inclusion-maximal affordable purchase set, when it fails.
  std::vector<FalseAtomWitness> witnesses;
  /// Value in the materialized model, when there is one.
  std::optional<bool> model_holds;
};

struct CounterexampleOptions {
  std::optional<std::size_t> depth;
  /// Random-walk equation checks instead of exhaustive ones when set.
  std::optional<std::uint64_t> seed;
  std::size_t samples = 2000;
  std::size_t max_paths = 1 << 18;
  bool materialize = true;
  std::size_t max_model_paths = 4096;
};

struct CounterexamplePackage {
  Hypergraph hypergraph;
  std::size_t depth = 0;
  std::vector<AtomFinding> atoms;
  /// Present for acyclic hypergraphs when materialization was requested.
  std::optional<LinearModel> model;
  /// The formula's value in the model, and in the model with costs capped
  /// just above the formula's rank.
  std::optional<bool> model_value;
  std::optional<bool> finite_model_value;
};

/// Throws PreconditionError when f holds in h.
CounterexamplePackage counterexample_for(const Hypergraph& h, const Formula& f,
                                         const CounterexampleOptions& options = {});

/// Re-checks a package against f: atom values, proofs, refutation coverage,
/// witness reports, and model values. Returns the first problem found.
std::optional<std::string> check_package(const CounterexamplePackage& pkg, const Formula& f);

}  // namespace bcfd
