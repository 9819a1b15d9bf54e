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

#include <doctest.h>

#include <algorithm>

#include "bcfd/entailment.hpp"
#include "bcfd/error.hpp"
#include "bcfd/gf2.hpp"
#include "bcfd/synth.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bcfd;

namespace {

// e0 {v1,v2} -> {v3,v4}, e1 {v1,v4} -> {v5,v6}.
Hypergraph two_stage() {
  AttributeUniverse v{"v1", "v2", "v3", "v4", "v5", "v6"};
  return Hypergraph(v, {Edge{AttrSet(6, {0, 1}), AttrSet(6, {2, 3}), Budget(1), {}},
                        Edge{AttrSet(6, {0, 3}), AttrSet(6, {4, 5}), Budget(2), {}}});
}

Hypergraph chain() {
  return Hypergraph(AttributeUniverse{"a", "b", "c"},
                    {Edge{AttrSet(3, {0}), AttrSet(3, {1}), Budget(1), {}},
                     Edge{AttrSet(3, {1}), AttrSet(3, {2}), Budget(1), {}}});
}

Hypergraph single_edge(Budget w = Budget(2)) {
  return Hypergraph(AttributeUniverse{"a", "b"}, {Edge{AttrSet(2, {0}), AttrSet(2, {1}), w, {}}});
}

Hypergraph edgeless(std::size_t n) { return Hypergraph(oracle::letters(n), {}); }

bool has(const std::vector<Path>& ps, const Path& p) { return std::find(ps.begin(), ps.end(), p) != ps.end(); }

std::vector<std::vector<int>> to_ints(const std::vector<gf2::Row>& rows, std::size_t cols) {
  std::vector<std::vector<int>> out;
  for (const auto& r : rows) {
    std::vector<int> v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = r.test(j);
    out.push_back(v);
  }
  return out;
}

/// The sum equations written out from the coordinate list alone.
std::vector<std::vector<int>> equation_matrix(const Hypergraph& h, const LinearModel& lm) {
  const auto& coords = lm.coordinates();
  auto col = [&](const Path& p) {
    auto it = std::find(coords.begin(), coords.end(), p);
    REQUIRE(it != coords.end());
    return static_cast<std::size_t>(it - coords.begin());
  };
  std::vector<std::vector<int>> rows;
  for (const Path& p : coords) {
    if (p.kind != PathKind::kEdge) continue;
    std::vector<int> row(coords.size());
    row[col(p)] ^= 1;
    std::vector<std::size_t> rest(p.items.begin() + 1, p.items.end());
    row[col(Path{PathKind::kVertex, rest})] ^= 1;
    for (std::size_t u : h.edge(p.origin()).tails.members()) {
      std::vector<std::size_t> longer{u};
      longer.insert(longer.end(), p.items.begin(), p.items.end());
      row[col(Path{PathKind::kVertex, longer})] ^= 1;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::size_t> columns_of(const LinearModel& lm, const AttrSet& s) {
  std::vector<std::size_t> cols;
  for (std::size_t a : s.members()) {
    const auto& c = lm.coordinates_of(a);
    cols.insert(cols.end(), c.begin(), c.end());
  }
  return cols;
}

Cut random_cut_with_root(oracle::Rng& rng, std::size_t n, std::size_t& root) {
  AttrSet left = oracle::random_set(rng, n, 0.4);
  root = oracle::pick(rng, 0, n - 1);
  left.erase(root);
  return Cut::with_left(left);
}

}  // namespace

TEST_SUITE("paths") {
  TEST_CASE("model attributes") {
    PathModel pm = synthesize_model(chain());
    CHECK(pm.universe().names() == std::vector<std::string>{"v:a", "v:b", "v:c", "e:e0", "e:e1"});
    CHECK(pm.costs()[0].is_infinite());
    CHECK(pm.costs()[3] == ExtendedBudget(Budget(1)));
    CHECK(pm.depth() == default_depth(chain()));
    CHECK(default_depth(chain()) == 12);
    CHECK_THROWS_AS(PathModel(chain(), 0), PreconditionError);
  }
  TEST_CASE("edgeless model has only trivial paths") {
    PathModel pm = synthesize_model(edgeless(3));
    for (std::size_t v = 0; v < 3; ++v) CHECK(enumerate_paths(pm, v, 5) == std::vector<Path>{Path::vertex(v)});
    CHECK(verify_equations_sampled(SymbolicVector::zero(), pm).checked == 0);
  }
  TEST_CASE("two-stage paths") {
    Hypergraph h = two_stage();
    Path through_both{PathKind::kVertex, {0, 0, 3, 1, 5}};
    CHECK(is_valid_path(h, through_both));
    CHECK(through_both.length() == 2);
    CHECK(through_both.str(h) == "<v1,e0,v4,e1,v6>");
    CHECK(has(enumerate_paths(h, PathKind::kVertex, 0, 2), through_both));
    Path from_edge{PathKind::kEdge, {0, 3, 1, 5}};
    CHECK(has(enumerate_paths(h, PathKind::kEdge, 0, 2), from_edge));
    CHECK(from_edge.tail() == Path{PathKind::kVertex, {3, 1, 5}});
    CHECK(from_edge.through(1) == Path{PathKind::kVertex, {1, 0, 3, 1, 5}});
    CHECK_FALSE(is_valid_path(h, Path{PathKind::kVertex, {2, 0, 3}}));
    CHECK_FALSE(is_valid_path(h, Path{PathKind::kEdge, {}}));
  }
  TEST_CASE("chain from a") {
    auto ps = enumerate_paths(chain(), PathKind::kVertex, 0, 4);
    CHECK(ps == std::vector<Path>{Path::vertex(0), Path{PathKind::kVertex, {0, 0, 1}},
                                  Path{PathKind::kVertex, {0, 0, 1, 1, 2}}});
  }
  TEST_CASE("path cap") {
    Hypergraph loop(AttributeUniverse{"a"}, {Edge{AttrSet(1, {0}), AttrSet(1, {0}), Budget(1), {}}});
    CHECK(enumerate_paths(loop, PathKind::kVertex, 0, 3).size() == 4);
    CHECK_THROWS_AS(enumerate_paths(loop, PathKind::kVertex, 0, 10, 5), CapExceeded);
  }
}

TEST_SUITE("inverted trees") {
  TEST_CASE("crossing edges need no choice") {
    Hypergraph h = single_edge();
    ChoiceFunction cf = choice_function(h, Cut::with_left(AttrSet(2, {0})), 1);
    CHECK(cf.crossing == EdgeSet(1, {0}));
    CHECK_FALSE(cf.tail_choice[0].has_value());
  }
  TEST_CASE("least tail on the right is chosen") {
    Hypergraph h(AttributeUniverse{"h", "k", "m"}, {Edge{AttrSet(3, {0, 1}), AttrSet(3, {2}), Budget(1), {}}});
    ChoiceFunction cf = choice_function(h, Cut::with_left(AttrSet(3)), 2);
    CHECK(cf.tail_choice[0] == std::optional<std::size_t>(0));
    CHECK(tree_membership(Path{PathKind::kVertex, {0, 0, 2}}, cf));
    CHECK_FALSE(tree_membership(Path{PathKind::kVertex, {1, 0, 2}}, cf));
  }
  TEST_CASE("forced tail") {
    Hypergraph h(AttributeUniverse{"a", "u", "b"}, {Edge{AttrSet(3, {0, 1}), AttrSet(3, {2}), Budget(1), {}}});
    ChoiceFunction cf = choice_function(h, Cut::with_left(AttrSet(3, {0})), 2);
    CHECK(cf.tail_choice[0] == std::optional<std::size_t>(1));
    CHECK(cf.crossing.empty());
  }
  TEST_CASE("membership") {
    Hypergraph h = chain();
    ChoiceFunction cf = choice_function(h, Cut::with_left(AttrSet(3, {0})), 2);
    CHECK(tree_membership(Path::vertex(2), cf));
    CHECK_FALSE(tree_membership(Path::vertex(1), cf));
    CHECK(tree_membership(Path{PathKind::kVertex, {1, 1, 2}}, cf));
    CHECK_FALSE(tree_membership(Path{PathKind::kVertex, {0, 0, 1, 1, 2}}, cf));
    CHECK(tree_membership(Path{PathKind::kEdge, {0, 1, 1, 2}}, cf));
    CHECK_THROWS_AS(choice_function(h, Cut::with_left(AttrSet(3, {0})), 0), PreconditionError);
  }
  TEST_CASE("flip values") {
    Hypergraph h = chain();
    ChoiceFunction cf = choice_function(h, Cut::with_left(AttrSet(3, {0})), 2);
    SymbolicVector f = flip_vector(cf);
    CHECK(f.value(Path::vertex(2)));
    CHECK(f.value(Path{PathKind::kVertex, {1, 1, 2}}));
    // e0 crosses the cut and starts a tree path; e1 does not cross.
    CHECK(f.value(Path{PathKind::kEdge, {0, 1, 1, 2}}));
    CHECK_FALSE(f.value(Path{PathKind::kEdge, {1, 2}}));
    for (const Path& p : enumerate_paths(h, PathKind::kVertex, 0, 4)) CHECK_FALSE(f.value(p));
    CHECK_FALSE(SymbolicVector::zero().value(Path::vertex(2)));
  }
}

TEST_SUITE("equations") {
  TEST_CASE("zero vector, flip vector and a broken one") {
    Hypergraph h = two_stage();
    PathModel pm = synthesize_model(h, 6);
    CHECK(verify_equations_sampled(SymbolicVector::zero(), pm).ok());
    ChoiceFunction cf = choice_function(h, Cut::with_left(AttrSet(6, {0, 1, 2})), 5);
    SymbolicVector f = flip_vector(cf);
    EquationReport rep = verify_equations_sampled(f, pm);
    CHECK(rep.ok());
    CHECK(rep.checked == rep.cases[0] + rep.cases[1] + rep.cases[2]);
    f.toggle(Path{PathKind::kEdge, {1, 4}});
    EquationReport broken = verify_equations_sampled(f, pm);
    REQUIRE(broken.violations.size() == 1);
    CHECK(broken.violations[0] == Path{PathKind::kEdge, {1, 4}});
    CHECK_THROWS_AS(verify_equations_sampled(f, pm, VerifyOptions{7}), PreconditionError);
  }
  TEST_CASE("random walks are reproducible") {
    Hypergraph h = two_stage();
    PathModel pm = synthesize_model(h);
    ChoiceFunction cf = choice_function(h, Cut::with_left(AttrSet(6, {0, 1})), 4);
    VerifyOptions o{pm.depth(), 7, 500};
    EquationReport a = verify_equations_sampled(flip_vector(cf), pm, o);
    EquationReport b = verify_equations_sampled(flip_vector(cf), pm, o);
    CHECK(a.ok());
    CHECK(a.checked == b.checked);
    CHECK(a.cases == b.cases);
  }
  TEST_CASE("flip vectors stay legitimate on random hypergraphs, cycles included") {
    oracle::Rng rng(61);
    std::array<std::size_t, 3> cases{};
    for (int i = 0; i < 220; ++i) {
      Hypergraph h = oracle::random_hypergraph(rng, 5, 6);
      PathModel pm = synthesize_model(h, 6);
      std::size_t root = 0;
      Cut c = random_cut_with_root(rng, h.vertex_count(), root);
      ChoiceFunction cf = choice_function(h, c, root);
      SymbolicVector f = flip_vector(cf);
      EquationReport rep = verify_equations_sampled(f, pm);
      CHECK_MESSAGE(rep.ok(), rep.violations.front().str(h));
      CHECK(verify_equations_sampled(SymbolicVector::zero(), pm).ok());
      for (int k = 0; k < 3; ++k) cases[k] += rep.cases[k];
      CHECK(f.value(Path::vertex(root)));
      for (std::size_t u : c.left.members())
        for (const Path& p : enumerate_paths(h, PathKind::kVertex, u, 6)) CHECK_FALSE(f.value(p));
      for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (!cf.crossing.contains(e))
          for (const Path& p : enumerate_paths(h, PathKind::kEdge, e, 6)) CHECK_FALSE(f.value(p));
      if (h.edge_count() > 0) {
        EdgeId e = oracle::pick(rng, 0, h.edge_count() - 1);
        Path bad{PathKind::kEdge, {e, *h.edge(e).heads.first()}};
        f.toggle(bad);
        CHECK_FALSE(verify_equations_sampled(f, pm).ok());
      }
    }
    for (std::size_t k : cases) CHECK(k > 0);
  }
}

TEST_SUITE("gf2") {
  TEST_CASE("rank and nullspace against textbook elimination") {
    oracle::Rng rng(62);
    for (int i = 0; i < 300; ++i) {
      std::size_t r = oracle::pick(rng, 0, 8), c = oracle::pick(rng, 1, 10);
      std::vector<gf2::Row> rows;
      for (std::size_t k = 0; k < r; ++k) {
        gf2::Row row(c);
        for (std::size_t j = 0; j < c; ++j)
          if (oracle::coin(rng)) row.set(j);
        rows.push_back(row);
      }
      std::size_t expected = oracle::rank(to_ints(rows, c));
      CHECK(gf2::rank(rows) == expected);
      auto null = gf2::nullspace(rows, c);
      CHECK(null.size() == c - expected);
      CHECK(oracle::rank(to_ints(null, c)) == null.size());
      for (const auto& x : null)
        for (const auto& row : rows) CHECK_FALSE(gf2::dot(row, x));
    }
  }
}

TEST_SUITE("materialized models") {
  TEST_CASE("edgeless") {
    LinearModel lm = materialize_acyclic(synthesize_model(edgeless(3)));
    CHECK(lm.dimension() == 3);
    CHECK(lm.equation_count() == 0);
  }
  TEST_CASE("single edge") {
    LinearModel lm = materialize_acyclic(synthesize_model(single_edge()));
    CHECK(lm.coordinates().size() == 4);
    CHECK(lm.equation_count() == 1);
    CHECK(lm.dimension() == 3);
    CHECK(lm.cost(2) == ExtendedBudget(Budget(2)));
  }
  TEST_CASE("chain against an independent rank") {
    Hypergraph h = chain();
    LinearModel lm = materialize_acyclic(synthesize_model(h));
    auto eq = equation_matrix(h, lm);
    CHECK(lm.dimension() == lm.coordinates().size() - oracle::rank(eq));
  }
  TEST_CASE("cyclic input is refused") {
    Hypergraph loop(AttributeUniverse{"a", "b"}, {Edge{AttrSet(2, {0}), AttrSet(2, {1}), Budget(1), {}},
                                                  Edge{AttrSet(2, {1}), AttrSet(2, {0}), Budget(1), {}}});
    CHECK_THROWS_AS(materialize_acyclic(synthesize_model(loop)), PreconditionError);
  }
  TEST_CASE("dependency checks on the single edge") {
    LinearModel lm = materialize_acyclic(synthesize_model(single_edge()));
    auto a = columns_of(lm, AttrSet(3, {0})), b = columns_of(lm, AttrSet(3, {1}));
    auto e = columns_of(lm, AttrSet(3, {2}));
    CHECK(subspace_fd_check(lm.basis(), a, {}, {}));
    CHECK(subspace_fd_check(lm.basis(), a, b, e));
    CHECK_FALSE(subspace_fd_check(lm.basis(), a, b, {}));
    CHECK(lm.determines(AttrSet(3, {0, 2}), AttrSet(3, {1})));
    CHECK_FALSE(lm.determines(AttrSet(3, {0}), AttrSet(3, {1})));
  }
  TEST_CASE("explicit tuples") {
    LinearModel lm = materialize_acyclic(synthesize_model(single_edge()));
    InfoModel m = lm.to_info_model();
    CHECK(m.tuples().size() == 8);
    CHECK(m.universe() == lm.universe());
    CHECK_THROWS_AS(lm.to_info_model(2), CapExceeded);
  }
  TEST_CASE("basis, determines and semantics on random acyclic hypergraphs") {
    oracle::Rng rng(63);
    for (int i = 0; i < 150; ++i) {
      Hypergraph h = oracle::random_acyclic_hypergraph(rng, 4, 4);
      PathModel pm = synthesize_model(h);
      LinearModel lm = materialize_acyclic(pm);
      auto eq = equation_matrix(h, lm);
      CHECK(lm.dimension() == lm.coordinates().size() - oracle::rank(eq));
      for (const auto& x : lm.basis())
        for (const auto& row : eq) {
          int s = 0;
          for (std::size_t j = 0; j < row.size(); ++j) s ^= row[j] & static_cast<int>(x.test(j));
          CHECK(s == 0);
        }
      const std::size_t n = pm.universe().size();
      if (lm.dimension() <= 10) {
        InfoModel explicit_model = lm.to_info_model();
        for (int k = 0; k < 10; ++k) {
          AttrSet s = oracle::random_set(rng, n), b = oracle::random_set(rng, n);
          CHECK(lm.determines(s, b) == explicit_model.determines(s, b));
        }
      }
      // Vertex-level atoms mean the same thing in h and in the model.
      std::vector<ExtendedBudget> weights;
      for (const Edge& e : h.edges()) weights.push_back(e.weight);
      auto grid = budget_grid(weights, Budget(12));
      for (int k = 0; k < 8; ++k) {
        Atom t{oracle::random_set(rng, h.vertex_count()), oracle::random_set(rng, h.vertex_count(), 0.5),
               grid[oracle::pick(rng, 0, grid.size() - 1)]};
        CHECK(holds(h, t) == eval_atom_model(lm, lift_atom(t, pm)).holds);
      }
      // Agreement on A and the bought edges forces agreement on the closure.
      AttrSet a = oracle::random_set(rng, h.vertex_count());
      EdgeSet f(h.edge_count());
      for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (oracle::coin(rng)) f.insert(e);
      AttrSet known = a.resized(n);
      for (EdgeId e : f.members()) known.insert(pm.edge_attribute(e));
      CHECK(lm.determines(known, closure(h, a, f).resized(n)));
    }
  }
}

TEST_SUITE("counterexample packages") {
  TEST_CASE("two folders") {
    PremiseSet p = fixture::premises(fixture::kTwoFolders);
    Hypergraph h = canonical_hypergraph(p);
    Formula f = parse_formula("{} |4 {b}", p.universe());
    CounterexamplePackage pkg = counterexample_for(h, f);
    REQUIRE(pkg.atoms.size() == 1);
    const AtomFinding& a = pkg.atoms[0];
    CHECK_FALSE(a.holds);
    CHECK(a.min_budget == Budget(5));
    REQUIRE(a.witnesses.size() == 1);
    CHECK(a.witnesses[0].purchase == EdgeSet(2, {0}));
    CHECK(a.witnesses[0].cut == Cut{AttrSet(2, {0}), AttrSet(2, {1})});
    CHECK(a.witnesses[0].root == 1);
    CHECK(a.witnesses[0].check.ok());
    REQUIRE(pkg.model.has_value());
    CHECK(pkg.model_value == false);
    CHECK(pkg.finite_model_value == false);
    CHECK_FALSE(check_package(pkg, f));
  }
  TEST_CASE("four folders") {
    PremiseSet p = fixture::premises(fixture::kFourFolders);
    Hypergraph h = canonical_hypergraph(p);
    Formula f = parse_formula(fixture::kFourFolderFormula, p.universe());
    CounterexamplePackage pkg = counterexample_for(h, f);
    CHECK_FALSE(pkg.model.has_value());
    for (const AtomFinding& a : pkg.atoms) {
      CHECK(a.holds == (a.atom.lhs.count() == 1 && a.atom.budget != Budget(4)));
      if (a.holds) {
        CHECK(check_proof(*a.proof, p).ok);
      } else {
        CHECK_FALSE(a.witnesses.empty());
        for (const auto& w : a.witnesses) CHECK(w.check.ok());
      }
    }
    CHECK_FALSE(check_package(pkg, f));
  }
  TEST_CASE("tampering is caught") {
    PremiseSet p = fixture::premises(fixture::kPadFolders);
    Hypergraph h = canonical_hypergraph(p);
    Formula f = parse_formula("{a} |4 {b} => {} |4 {b}", p.universe());
    CounterexamplePackage pkg = counterexample_for(h, f);
    CHECK_FALSE(check_package(pkg, f));
    CounterexamplePackage wrong_value = pkg;
    wrong_value.atoms[0].holds = !wrong_value.atoms[0].holds;
    CHECK(check_package(wrong_value, f).has_value());
    CounterexamplePackage lost_witness = pkg;
    for (auto& a : lost_witness.atoms) if (!a.holds) a.witnesses.pop_back();
    CHECK(check_package(lost_witness, f).has_value());
  }
  TEST_CASE("parallel edges keep their own ids") {
    Hypergraph h(AttributeUniverse{"a", "b"}, {Edge{AttrSet(2), AttrSet(2, {0}), Budget(1), {}},
                                               Edge{AttrSet(2), AttrSet(2, {0}), Budget(1), {}},
                                               Edge{AttrSet(2), AttrSet(2, {1}), Budget(3), {}}});
    Formula f = parse_formula("{} |2 {b}", h.vertices());
    CounterexamplePackage pkg = counterexample_for(h, f);
    CHECK_FALSE(check_package(pkg, f));
  }
  TEST_CASE("reflexive atom has no counterexample") {
    Hypergraph h = single_edge();
    CHECK_THROWS_AS(counterexample_for(h, parse_formula("{a} |0 {a}", h.vertices())), PreconditionError);
  }
}
