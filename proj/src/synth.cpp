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

#include "bcfd/synth.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "bcfd/entailment.hpp"
#include "bcfd/error.hpp"

namespace bcfd {

std::size_t Path::length() const {
  return kind == PathKind::kVertex ? (items.size() - 1) / 2 : (items.size() + 1) / 2;
}

Path Path::tail() const {
  if (kind != PathKind::kEdge) throw PreconditionError("tail of a vertex-initiated path");
  return Path{PathKind::kVertex, {items.begin() + 1, items.end()}};
}

Path Path::through(std::size_t u) const {
  if (kind != PathKind::kEdge) throw PreconditionError("extending a vertex-initiated path");
  Path p{PathKind::kVertex, {u}};
  p.items.insert(p.items.end(), items.begin(), items.end());
  return p;
}

std::string Path::str(const Hypergraph& h) const {
  std::string out = "<";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    bool is_edge = (kind == PathKind::kEdge) == (i % 2 == 0);
    out += is_edge ? h.edge_name(items[i]) : h.vertices().name(items[i]);
  }
  return out + ">";
}

bool is_valid_path(const Hypergraph& h, const Path& p) {
  if (p.items.empty()) return false;
  const std::size_t offset = p.kind == PathKind::kEdge ? 0 : 1;
  if (p.kind == PathKind::kVertex) {
    if (p.items[0] >= h.vertex_count()) return false;
  } else if (p.items.size() < 2) {
    return false;
  }
  if ((p.items.size() - offset) % 2 != 0) return false;
  for (std::size_t i = offset; i < p.items.size(); i += 2) {
    std::size_t e = p.items[i], v = p.items[i + 1];
    if (e >= h.edge_count() || v >= h.vertex_count()) return false;
    if (!h.edge(e).heads.contains(v)) return false;
    if (i > 0 && !h.edge(e).tails.contains(p.items[i - 1])) return false;
  }
  return true;
}

namespace {

std::vector<std::string> model_names(const Hypergraph& h) {
  std::vector<std::string> names;
  for (const std::string& v : h.vertices().names()) names.push_back("v:" + v);
  std::set<std::string> seen;
  bool clash = false;
  for (EdgeId e = 0; e < h.edge_count(); ++e) clash |= !seen.insert(h.edge_name(e)).second;
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    names.push_back("e:" + (clash ? "e" + std::to_string(e) : h.edge_name(e)));
  return names;
}

// Depth-first extension of `p` by up to `budget` more edges, visiting every
// prefix. Returns false when the visitor asks to stop.
template <class Visit>
void extend(const Hypergraph& h, Path& p, std::size_t budget, Visit& visit) {
  visit(p);
  if (budget == 0) return;
  for (EdgeId e : h.edges_with_tail(p.last_vertex())) {
    for (std::size_t v : h.edge(e).heads.members()) {
      p.items.push_back(e);
      p.items.push_back(v);
      extend(h, p, budget - 1, visit);
      p.items.resize(p.items.size() - 2);
    }
  }
}

template <class Visit>
void for_each_path(const Hypergraph& h, PathKind kind, std::size_t origin, std::size_t maxlen,
                   Visit&& visit) {
  if (kind == PathKind::kVertex) {
    Path p = Path::vertex(origin);
    extend(h, p, maxlen, visit);
    return;
  }
  if (maxlen == 0) return;
  for (std::size_t v : h.edge(origin).heads.members()) {
    Path p{PathKind::kEdge, {origin, v}};
    extend(h, p, maxlen - 1, visit);
  }
}

// Counts visits and throws past the cap.
struct PathBudget {
  std::size_t used = 0;
  std::size_t cap;
  void spend() {
    if (++used > cap)
      throw CapExceeded("more than " + std::to_string(cap) +
                        " paths; lower the depth or use sampled checks");
  }
};

}  // namespace

PathModel::PathModel(Hypergraph h, std::size_t depth)
    : h_(std::move(h)), universe_(model_names(h_)), depth_(depth) {
  if (depth_ == 0) throw PreconditionError("depth must be at least 1");
  costs_.assign(h_.vertex_count(), ExtendedBudget::infinity());
  for (const Edge& e : h_.edges()) costs_.push_back(e.weight);
}

std::size_t default_depth(const Hypergraph& h) { return 2 * (h.vertex_count() + h.edge_count()) + 2; }

PathModel synthesize_model(Hypergraph h, std::optional<std::size_t> depth) {
  std::size_t d = depth ? *depth : default_depth(h);
  return PathModel(std::move(h), d);
}

std::vector<Path> enumerate_paths(const Hypergraph& h, PathKind kind, std::size_t origin,
                                  std::size_t maxlen, std::size_t max_paths) {
  std::vector<Path> out;
  PathBudget budget{0, max_paths};
  for_each_path(h, kind, origin, maxlen, [&](const Path& p) {
    budget.spend();
    out.push_back(p);
  });
  return out;
}

std::vector<Path> enumerate_paths(const PathModel& pm, std::size_t origin_attribute,
                                  std::size_t maxlen, std::size_t max_paths) {
  if (origin_attribute >= pm.universe().size()) throw PreconditionError("no such attribute");
  if (pm.is_vertex_attribute(origin_attribute))
    return enumerate_paths(pm.hypergraph(), PathKind::kVertex, origin_attribute, maxlen, max_paths);
  return enumerate_paths(pm.hypergraph(), PathKind::kEdge,
                         origin_attribute - pm.hypergraph().vertex_count(), maxlen, max_paths);
}

ChoiceFunction choice_function(const Hypergraph& h, const Cut& c, std::size_t root) {
  if (root >= h.vertex_count() || !c.right.contains(root))
    throw PreconditionError("root must lie on the right side of the cut");
  ChoiceFunction cf{c, root, crossing_edges(h, c), std::vector<std::optional<std::size_t>>(h.edge_count())};
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Edge& edge = h.edge(e);
    if (cf.crossing.contains(e) || !edge.heads.intersects(c.right)) continue;
    cf.tail_choice[e] = (edge.tails & c.right).first();
    if (!cf.tail_choice[e]) throw std::logic_error("non-crossing edge without a right-side tail");
  }
  return cf;
}

bool tree_membership(const Path& p, const ChoiceFunction& cf) {
  if (p.items.empty() || p.last_vertex() != cf.root) return false;
  // Edge positions whose preceding vertex must be the chosen tail.
  std::size_t first = p.kind == PathKind::kVertex ? 1 : 2;
  for (std::size_t i = first; i < p.items.size(); i += 2) {
    std::size_t e = p.items[i];
    if (cf.crossing.contains(e)) return false;
    const auto& chosen = cf.tail_choice.at(e);
    if (!chosen || *chosen != p.items[i - 1]) return false;
  }
  return true;
}

SymbolicVector SymbolicVector::flip(ChoiceFunction cf) {
  SymbolicVector v;
  v.choice_ = std::move(cf);
  return v;
}

SymbolicVector& SymbolicVector::toggle(const Path& p) {
  if (!toggled_.insert(p).second) toggled_.erase(p);
  return *this;
}

bool SymbolicVector::value(const Path& p) const {
  bool bit = false;
  if (choice_ && tree_membership(p, *choice_))
    bit = p.kind == PathKind::kVertex || choice_->crossing.contains(p.origin());
  if (toggled_.count(p)) bit = !bit;
  return bit;
}

namespace {

void check_equation(const SymbolicVector& v, const Hypergraph& h, const Path& p, EquationReport& r) {
  ++r.checked;
  bool sum = v.value(p);
  for (std::size_t u : h.edge(p.origin()).tails.members()) sum ^= v.value(p.through(u));
  if (sum != v.value(p.tail())) r.violations.push_back(p);
  const auto& cf = v.choice();
  if (!cf || !tree_membership(p, *cf)) {
    ++r.cases[0];
  } else if (cf->crossing.contains(p.origin())) {
    ++r.cases[1];
  } else {
    ++r.cases[2];
  }
}

}  // namespace

EquationReport verify_equations_sampled(const SymbolicVector& v, const PathModel& pm,
                                        const VerifyOptions& options) {
  const Hypergraph& h = pm.hypergraph();
  if (options.max_len > pm.depth()) throw PreconditionError("check length exceeds the model depth");
  EquationReport r;
  if (!options.seed) {
    PathBudget budget{0, options.max_paths};
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      for_each_path(h, PathKind::kEdge, e, options.max_len, [&](const Path& p) {
        budget.spend();
        check_equation(v, h, p, r);
      });
  } else {
    std::vector<EdgeId> starts;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      if (!h.edge(e).heads.empty()) starts.push_back(e);
    std::mt19937_64 rng(*options.seed);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    for (std::size_t s = 0; s < options.samples && !starts.empty() && options.max_len > 0; ++s) {
      EdgeId e = starts[pick(starts.size())];
      auto heads = h.edge(e).heads.members();
      Path p{PathKind::kEdge, {e, heads[pick(heads.size())]}};
      std::size_t len = 1 + pick(options.max_len);
      while (p.length() < len) {
        const auto& next = h.edges_with_tail(p.last_vertex());
        std::vector<std::pair<EdgeId, std::size_t>> steps;
        for (EdgeId f : next)
          for (std::size_t w : h.edge(f).heads.members()) steps.emplace_back(f, w);
        if (steps.empty()) break;
        auto [f, w] = steps[pick(steps.size())];
        p.items.push_back(f);
        p.items.push_back(w);
      }
      check_equation(v, h, p, r);
    }
  }
  std::sort(r.violations.begin(), r.violations.end());
  r.violations.erase(std::unique(r.violations.begin(), r.violations.end()), r.violations.end());
  return r;
}

LinearModel::LinearModel(AttributeUniverse universe, std::vector<ExtendedBudget> costs,
                         std::vector<Path> coordinates,
                         std::vector<std::vector<std::size_t>> coordinates_of,
                         std::vector<gf2::Row> basis, std::size_t equation_count)
    : universe_(std::move(universe)),
      costs_(std::move(costs)),
      coordinates_(std::move(coordinates)),
      coordinates_of_(std::move(coordinates_of)),
      basis_(std::move(basis)),
      equation_count_(equation_count) {
  if (costs_.size() != universe_.size() || coordinates_of_.size() != universe_.size())
    throw PreconditionError("linear model tables do not match its universe");
}

bool LinearModel::determines(const AttrSet& s, const AttrSet& b) const {
  if (s.universe_size() != universe_.size() || b.universe_size() != universe_.size())
    throw PreconditionError("attribute set is not over the model's universe");
  std::vector<std::size_t> a_cols, b_cols;
  for (std::size_t a : s.members())
    a_cols.insert(a_cols.end(), coordinates_of_[a].begin(), coordinates_of_[a].end());
  for (std::size_t a : (b - s).members())
    b_cols.insert(b_cols.end(), coordinates_of_[a].begin(), coordinates_of_[a].end());
  return subspace_fd_check(basis_, a_cols, b_cols, {});
}

LinearModel LinearModel::with_costs(std::vector<ExtendedBudget> costs) const {
  LinearModel m = *this;
  if (costs.size() != universe_.size()) throw PreconditionError("one cost per attribute is required");
  m.costs_ = std::move(costs);
  return m;
}

InfoModel LinearModel::to_info_model(std::size_t max_dimension) const {
  if (dimension() > max_dimension || dimension() >= 63)
    throw CapExceeded("model dimension " + std::to_string(dimension()) + " exceeds the tuple cap");
  std::vector<std::vector<std::string>> rows;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dimension()); ++mask) {
    gf2::Row x(coordinates_.size());
    for (std::size_t i = 0; i < dimension(); ++i)
      if (mask >> i & 1) x ^= basis_[i];
    std::vector<std::string> row;
    for (const auto& cols : coordinates_of_) {
      std::string bits;
      for (std::size_t c : cols) bits += x.test(c) ? '1' : '0';
      row.push_back(bits.empty() ? "-" : bits);
    }
    rows.push_back(std::move(row));
  }
  return InfoModel(universe_, costs_, rows);
}

bool subspace_fd_check(const std::vector<gf2::Row>& basis, const std::vector<std::size_t>& a,
                       const std::vector<std::size_t>& b, const std::vector<std::size_t>& c) {
  if (b.empty()) return true;
  std::vector<std::size_t> known = a;
  known.insert(known.end(), c.begin(), c.end());
  std::vector<std::size_t> all = known;
  all.insert(all.end(), b.begin(), b.end());
  return gf2::rank(gf2::select_columns(basis, known)) == gf2::rank(gf2::select_columns(basis, all));
}

LinearModel materialize_acyclic(const PathModel& pm, std::size_t max_paths) {
  const Hypergraph& h = pm.hypergraph();
  if (!is_acyclic(h)) throw PreconditionError("cannot materialize a cyclic hypergraph");
  std::vector<Path> coords;
  std::vector<std::vector<std::size_t>> coords_of(pm.universe().size());
  std::map<Path, std::size_t> index;
  PathBudget budget{0, max_paths};
  // An acyclic hypergraph has no path with more than |V| - 1 edges.
  const std::size_t longest = h.vertex_count();
  for (std::size_t a = 0; a < pm.universe().size(); ++a) {
    const bool vertex = pm.is_vertex_attribute(a);
    for_each_path(h, vertex ? PathKind::kVertex : PathKind::kEdge, vertex ? a : a - h.vertex_count(),
                  longest, [&](const Path& p) {
                    budget.spend();
                    index.emplace(p, coords.size());
                    coords_of[a].push_back(coords.size());
                    coords.push_back(p);
                  });
  }
  std::vector<gf2::Row> equations;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Path& p = coords[i];
    if (p.kind != PathKind::kEdge) continue;
    gf2::Row row(coords.size());
    row.flip(i);
    for (std::size_t u : h.edge(p.origin()).tails.members()) row.flip(index.at(p.through(u)));
    row.flip(index.at(p.tail()));
    equations.push_back(std::move(row));
  }
  const std::size_t equation_count = equations.size();
  auto basis = gf2::nullspace(std::move(equations), coords.size());
  return LinearModel(pm.universe(), pm.costs(), std::move(coords), std::move(coords_of),
                     std::move(basis), equation_count);
}

Atom lift_atom(const Atom& t, const PathModel& pm) {
  const std::size_t n = pm.universe().size();
  if (t.lhs.universe_size() != pm.hypergraph().vertex_count())
    throw PreconditionError("atom is not over the hypergraph's vertices");
  return Atom{t.lhs.resized(n), t.rhs.resized(n), t.budget};
}

namespace {

WitnessCheck check_witness(const PathModel& pm, const ChoiceFunction& cf,
                           const CounterexampleOptions& options) {
  const Hypergraph& h = pm.hypergraph();
  const SymbolicVector zero = SymbolicVector::zero();
  const SymbolicVector flipped = SymbolicVector::flip(cf);
  WitnessCheck w;
  PathBudget budget{0, options.max_paths};
  w.left_unflipped = true;
  for (std::size_t u : cf.cut.left.members())
    for_each_path(h, PathKind::kVertex, u, pm.depth(), [&](const Path& p) {
      budget.spend();
      if (flipped.value(p) != zero.value(p)) w.left_unflipped = false;
    });
  w.non_crossing_unflipped = true;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (cf.crossing.contains(e)) continue;
    for_each_path(h, PathKind::kEdge, e, pm.depth(), [&](const Path& p) {
      budget.spend();
      if (flipped.value(p) != zero.value(p)) w.non_crossing_unflipped = false;
    });
  }
  const Path root = Path::vertex(cf.root);
  w.root_flipped = flipped.value(root) != zero.value(root);
  VerifyOptions vo{pm.depth(), options.seed, options.samples, options.max_paths};
  w.zero_equations = verify_equations_sampled(zero, pm, vo);
  w.flip_equations = verify_equations_sampled(flipped, pm, vo);
  return w;
}

}  // namespace

CounterexamplePackage counterexample_for(const Hypergraph& h, const Formula& f,
                                         const CounterexampleOptions& options) {
  if (holds(h, f)) throw PreconditionError("formula holds in the hypergraph; no counterexample");
  PathModel pm = synthesize_model(h, options.depth);
  CounterexamplePackage pkg;
  pkg.hypergraph = h;
  pkg.depth = pm.depth();
  if (options.materialize && is_acyclic(h)) pkg.model = materialize_acyclic(pm, options.max_model_paths);
  const PremiseSet premises = premises_of(h);
  for (const Atom& t : atoms(f)) {
    AtomFinding finding;
    finding.atom = t;
    EntailmentAnswer answer = entails(premises, t);
    finding.holds = answer.entailed;
    if (answer.entailed) {
      finding.min_budget = answer.purchase->cost;
      finding.proof = std::move(answer.proof);
    } else {
      // Refute against h itself: its edge ids may differ from the
      // deduplicated premise list when parallel edges repeat.
      Refutation refutation = refute(h, t);
      finding.min_budget = refutation.min_budget;
      for (PurchaseCut& pc : refutation.cuts) {
        ChoiceFunction cf = choice_function(h, pc.cut, pc.root);
        WitnessCheck check = check_witness(pm, cf, options);
        finding.witnesses.push_back(
            FalseAtomWitness{std::move(pc.purchase), std::move(pc.cut), pc.root, std::move(cf), std::move(check)});
      }
    }
    if (pkg.model) finding.model_holds = eval_atom_model(*pkg.model, lift_atom(t, pm)).holds;
    pkg.atoms.push_back(std::move(finding));
  }
  if (pkg.model) {
    const Formula lifted = widen(f, pm.universe().size());
    pkg.model_value = eval_formula_model(*pkg.model, lifted);
    pkg.finite_model_value = eval_formula_model(truncate_costs(*pkg.model, rank(f) + Budget(1)), lifted);
  }
  return pkg;
}

std::optional<std::string> check_package(const CounterexamplePackage& pkg, const Formula& f) {
  const Hypergraph& h = pkg.hypergraph;
  const std::vector<Atom> expected = atoms(f);
  if (pkg.atoms.size() != expected.size()) return "package does not cover the formula's atoms";
  const PremiseSet premises = premises_of(h);
  Assignment sigma;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const AtomFinding& a = pkg.atoms[i];
    const std::string where = "atom " + a.atom.str(h.vertices()) + ": ";
    if (!(a.atom == expected[i])) return "package atoms are out of order";
    auto best = min_budget(h, a.atom.lhs, a.atom.rhs);
    std::optional<Budget> least = best ? std::optional<Budget>(best->cost) : std::nullopt;
    if (a.min_budget != least) return where + "wrong minimum budget";
    if (a.holds != (least && *least <= a.atom.budget)) return where + "wrong truth value";
    sigma.emplace(a.atom, a.holds);
    if (a.holds) {
      if (!a.proof) return where + "missing proof";
      if (!(a.proof->conclusion() == a.atom)) return where + "proof proves something else";
      if (ProofCheck pc = check_proof(*a.proof, premises); !pc)
        return where + "proof fails at " + pc.failing_path + ": " + pc.reason;
    } else {
      Refutation r{a.min_budget, {}};
      for (const FalseAtomWitness& w : a.witnesses) {
        r.cuts.push_back(PurchaseCut{w.purchase, w.cut, w.root});
        ChoiceFunction fresh = choice_function(h, w.cut, w.root);
        if (fresh.crossing != w.choice.crossing || fresh.tail_choice != w.choice.tail_choice)
          return where + "choice function does not match its cut";
        if (!w.check.ok()) return where + "witness checks failed";
      }
      if (auto problem = check_refutation(h, a.atom, r)) return where + *problem;
    }
  }
  if (evaluate(f, sigma)) return "formula holds under the package's atom values";
  if (pkg.model) {
    const std::size_t n = pkg.model->universe().size();
    for (const AtomFinding& a : pkg.atoms) {
      Atom lifted{a.atom.lhs.resized(n), a.atom.rhs.resized(n), a.atom.budget};
      if (a.model_holds != eval_atom_model(*pkg.model, lifted).holds)
        return "model value of " + a.atom.str(h.vertices()) + " is wrong";
      if (a.model_holds != a.holds) return "model disagrees with the hypergraph on " + a.atom.str(h.vertices());
    }
    if (pkg.model_value != false || pkg.finite_model_value != false)
      return "materialized model does not falsify the formula";
  }
  return std::nullopt;
}

}  // namespace bcfd
