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

#include "bcfd/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bcfd/entailment.hpp"
#include "bcfd/error.hpp"
#include "bcfd/infomodel.hpp"
#include "bcfd/json_io.hpp"
#include "bcfd/synth.hpp"

namespace bcfd::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate failed its own re-check; never expected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Globals {
  bool json = false;
  std::string attrs;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> depth;
  std::size_t cap_atoms = 20;
  std::size_t cap_edges = 64;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw UsageError("cannot write '" + path + "'");
  o << text;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw InternalError("certificate re-check failed: " + what);
}

std::optional<AttributeUniverse> declared(const Globals& g) {
  if (g.attrs.empty()) return std::nullopt;
  return AttributeUniverse(split_names(g.attrs));
}

struct LoadedFormula {
  AttributeUniverse universe;
  Formula formula;
};

LoadedFormula load_formula(const std::string& path, const Globals& g,
                           const std::optional<AttributeUniverse>& required = std::nullopt) {
  FormulaDocument doc = split_formula_document(read_file(path));
  std::optional<AttributeUniverse> flag = declared(g);
  if (doc.declared && flag && !(*doc.declared == *flag))
    throw ParseError("formula header does not match --attrs");
  std::optional<AttributeUniverse> u = doc.declared ? doc.declared : flag ? flag : required;
  if (!u) throw ParseError("formula needs an 'attrs:' header or --attrs");
  if (required && !(*u == *required))
    throw ParseError("formula attributes do not match the model's attributes");
  Formula f = parse_formula(doc.body, *u);
  return LoadedFormula{std::move(*u), std::move(f)};
}

InfoModel load_model(const std::string& model_path, const std::string& csv_path,
                     const std::string& costs_path) {
  if (!model_path.empty()) {
    if (!csv_path.empty()) throw UsageError("give either --model or --csv, not both");
    return model_from_json(Json::parse(read_file(model_path)));
  }
  if (csv_path.empty() || costs_path.empty())
    throw UsageError("need --model FILE or both --csv FILE and --costs FILE");
  return load_csv_model(read_file(csv_path), read_file(costs_path));
}

std::string edge_list(const EdgeSet& f, const Hypergraph& h) {
  std::string out = "{";
  bool first = true;
  for (EdgeId e : f.members()) {
    if (!first) out += ',';
    out += h.edge_name(e);
    first = false;
  }
  return out + "}";
}

Json edge_names(const EdgeSet& f, const Hypergraph& h) {
  Json out = Json::array();
  for (EdgeId e : f.members()) out.push_back(h.edge_name(e));
  return out;
}

void print_proof(std::ostream& out, const Proof& p, const AttributeUniverse& u, int depth = 1) {
  out << std::string(2 * depth, ' ') << rule_name(p.rule());
  if (p.rule() == Proof::Rule::kAugmentation) out << '[' << p.with().str(u) << ']';
  out << "  " << p.conclusion().str(u) << '\n';
  for (const Proof& c : p.children()) print_proof(out, c, u, depth + 1);
}

void print_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "  vertices:";
  for (const std::string& v : h.vertices().names()) out << ' ' << v;
  out << '\n';
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Edge& edge = h.edge(e);
    out << "  " << h.edge_name(e) << ": " << edge.tails.str(h.vertices()) << " -> "
        << edge.heads.str(h.vertices()) << " weight " << edge.weight.str() << '\n';
  }
}

void print_refutation(std::ostream& out, const Refutation& r, const Hypergraph& h) {
  out << "minimum budget: " << (r.min_budget ? r.min_budget->str() : "unreachable") << '\n';
  for (const PurchaseCut& pc : r.cuts)
    out << "  buying " << edge_list(pc.purchase, h) << " reaches " << pc.cut.left.str(h.vertices())
        << ", missing " << h.vertices().name(pc.root) << '\n';
}

void print_assignment(std::ostream& out, const Assignment& sigma, const AttributeUniverse& u) {
  for (const auto& [atom, value] : sigma) out << "  " << atom.str(u) << " = " << (value ? "true" : "false") << '\n';
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_prove(const Globals& g, const std::string& premises_path, const std::string& goal_text,
              const std::string& emit_proof, const std::string& emit_counter, std::ostream& out) {
  PremiseSet premises = parse_premises(read_file(premises_path), declared(g));
  const AttributeUniverse& u = premises.universe();
  Atom goal = parse_atom(goal_text, u);
  EntailmentAnswer answer = entails(premises, goal, SearchLimits{g.cap_edges});
  Hypergraph h = canonical_hypergraph(premises);
  if (answer.entailed) {
    ProofCheck check = check_proof(*answer.proof, premises);
    expect(check.ok && answer.proof->conclusion() == goal, "proof: " + check.reason);
    Json proof = proof_to_json(*answer.proof, u);
    if (!emit_proof.empty()) write_file(emit_proof, proof.dump(2) + "\n");
    if (g.json) {
      emit(out, Json{{"command", "prove"},
                     {"goal", goal.str(u)},
                     {"entailed", true},
                     {"min_budget", answer.purchase->cost.str()},
                     {"purchase", edge_names(answer.purchase->edges, h)},
                     {"proof", proof}});
    } else {
      out << "provable: " << goal.str(u) << '\n'
          << "minimum budget: " << answer.purchase->cost.str() << '\n'
          << "purchase: " << edge_list(answer.purchase->edges, h) << '\n'
          << "proof:\n";
      print_proof(out, *answer.proof, u);
    }
    return kAffirmative;
  }
  const Refutation& r = *answer.refutation;
  auto problem = check_refutation(h, goal, r);
  expect(!problem, problem.value_or(""));
  Json cert = refutation_to_json(r, h);
  if (!emit_counter.empty()) write_file(emit_counter, cert.dump(2) + "\n");
  if (g.json) {
    emit(out, Json{{"command", "prove"}, {"goal", goal.str(u)}, {"entailed", false}, {"refutation", cert}});
  } else {
    out << "not provable: " << goal.str(u) << '\n';
    print_refutation(out, r, h);
  }
  return kNegative;
}

int cmd_min_budget(const Globals& g, const std::string& premises_path, const std::string& from,
                   const std::string& to, std::ostream& out) {
  PremiseSet premises = parse_premises(read_file(premises_path), declared(g));
  const AttributeUniverse& u = premises.universe();
  AttrSet a = parse_attr_set(from, u);
  AttrSet b = parse_attr_set(to, u);
  Hypergraph h = canonical_hypergraph(premises);
  auto best = min_budget(h, a, b, SearchLimits{g.cap_edges});
  if (best) {
    expect(b.is_subset_of(closure(h, a, best->edges)) && weight(h, best->edges) == best->cost,
           "purchase does not reach the target");
    if (g.json) {
      emit(out, Json{{"command", "min-budget"},
                     {"min_budget", best->cost.str()},
                     {"purchase", edge_names(best->edges, h)}});
    } else {
      out << best->cost.str() << '\n';
    }
    return kAffirmative;
  }
  Cut cut = reachability_cut(h, a, h.all_edges());
  std::size_t root = *(b & cut.right).first();
  expect(cut.left == closure(h, a, h.all_edges()) && b.contains(root) && cut.right.contains(root),
         "unreachability cut");
  if (g.json) {
    emit(out, Json{{"command", "min-budget"},
                   {"min_budget", nullptr},
                   {"reachable", names_json(cut.left, u)},
                   {"root", u.name(root)}});
  } else {
    out << "unreachable\n"
        << "  every edge reaches only " << cut.left.str(u) << ", missing " << u.name(root) << '\n';
  }
  return kNegative;
}

CounterexampleOptions package_options(const Globals& g, bool materialize) {
  CounterexampleOptions o;
  o.depth = g.depth;
  o.seed = g.seed;
  o.materialize = materialize;
  return o;
}

int cmd_decide(const Globals& g, bool validity, const std::string& path,
               const std::string& emit_counter, bool materialize, std::ostream& out) {
  LoadedFormula lf = load_formula(path, g);
  const AttributeUniverse& u = lf.universe;
  const Formula& f = lf.formula;
  const SearchLimits limits{g.cap_edges};
  SatAnswer answer = validity ? decide_valid(f, u, g.cap_atoms, limits)
                              : decide_satisfiable(f, u, g.cap_atoms, limits);
  const char* command = validity ? "valid" : "sat";
  const bool has_model = validity ? !answer.verdict : answer.verdict;
  if (has_model) {
    const Hypergraph& h = *answer.witness;
    expect(holds(h, f, limits) == !validity, "witness hypergraph gives the wrong value");
    Json refutations = Json::array();
    for (const auto& [atom, value] : *answer.assignment) {
      expect(holds(h, atom, limits) == value, "witness hypergraph disagrees with the assignment");
      if (value) continue;
      Refutation r = refute(h, atom);
      auto problem = check_refutation(h, atom, r);
      expect(!problem, problem.value_or(""));
      refutations.push_back(Json{{"atom", atom.str(u)}, {"refutation", refutation_to_json(r, h)}});
    }
    if (!emit_counter.empty()) {
      if (!validity) throw UsageError("--emit-counter applies to 'valid' only");
      CounterexamplePackage pkg = counterexample_for(h, f, package_options(g, materialize));
      auto problem = check_package(pkg, f);
      expect(!problem, problem.value_or(""));
      write_file(emit_counter, package_to_json(pkg).dump(2) + "\n");
    }
    if (g.json) {
      emit(out, Json{{"command", command},
                     {"formula", to_string(f, u)},
                     {"verdict", answer.verdict},
                     {"assignment", assignment_to_json(*answer.assignment, u)},
                     {"hypergraph", hypergraph_to_json(h)},
                     {"refutations", refutations}});
    } else {
      out << (validity ? "invalid" : "satisfiable") << '\n'
          << (validity ? "falsifying" : "satisfying") << " assignment:\n";
      print_assignment(out, *answer.assignment, u);
      out << (validity ? "counterexample" : "model") << " hypergraph:\n";
      print_hypergraph(out, h);
    }
    return validity ? kNegative : kAffirmative;
  }
  const Formula target = validity ? Formula::negation(f) : f;
  std::vector<BlockedAssignment> cert = unsatisfiability_certificate(target, u, g.cap_atoms, limits);
  auto problem = check_unsatisfiability_certificate(target, u, cert, g.cap_atoms);
  expect(!problem, problem.value_or(""));
  if (g.json) {
    Json entries = Json::array();
    for (const BlockedAssignment& b : cert)
      entries.push_back(Json{{"assignment", assignment_to_json(b.assignment, u)},
                             {"blocked", b.blocked.str(u)},
                             {"proof", proof_to_json(b.proof, u)}});
    emit(out, Json{{"command", command},
                   {"formula", to_string(f, u)},
                   {"verdict", answer.verdict},
                   {"blocked_assignments", entries}});
  } else {
    out << (validity ? "valid" : "unsatisfiable") << '\n'
        << cert.size() << " propositional " << (validity ? "counter-assignments" : "assignments")
        << ", each contradicted by a derivation\n";
    for (const BlockedAssignment& b : cert)
      out << "  derives " << b.blocked.str(u) << " (" << b.proof.node_count() << " proof nodes)\n";
  }
  return validity ? kAffirmative : kNegative;
}

int cmd_check_model(const Globals& g, const std::string& model_path, const std::string& csv_path,
                    const std::string& costs_path, const std::string& formula_path, std::ostream& out) {
  InfoModel m = load_model(model_path, csv_path, costs_path);
  LoadedFormula lf = load_formula(formula_path, g, m.universe());
  const AttributeUniverse& u = m.universe();
  Assignment sigma;
  Json findings = Json::array();
  std::ostringstream text;
  for (const Atom& t : atoms(lf.formula)) {
    AtomVerdict v = eval_atom_model(m, t);
    sigma.emplace(t, v.holds);
    if (v.holds) {
      expect(set_cost(m, *v.witness) <= ExtendedBudget(t.budget) && m.determines(t.lhs | *v.witness, t.rhs),
             "witness set");
      findings.push_back(Json{{"atom", t.str(u)}, {"holds", true}, {"witness", names_json(*v.witness, u)}});
      text << "  " << t.str(u) << ": true, adding " << v.witness->str(u) << '\n';
    } else {
      ModelRefutation r = *refute_in_model(m, t);
      auto problem = check_model_refutation(m, t, r);
      expect(!problem, problem.value_or(""));
      Json pairs = Json::array();
      text << "  " << t.str(u) << ": false\n";
      for (const auto& e : r.entries) {
        pairs.push_back(Json{{"added", names_json(e.extra, u)}, {"tuples", {e.first, e.second}}});
        text << "    adding " << e.extra.str(u) << ": tuples " << e.first << " and " << e.second
             << " agree on the left but not on the right\n";
      }
      findings.push_back(Json{{"atom", t.str(u)}, {"holds", false}, {"pairs", pairs}});
    }
  }
  const bool value = evaluate(lf.formula, sigma);
  if (g.json) {
    emit(out, Json{{"command", "check-model"}, {"formula", to_string(lf.formula, u)}, {"holds", value}, {"atoms", findings}});
  } else {
    out << (value ? "holds" : "fails") << '\n' << text.str();
  }
  return value ? kAffirmative : kNegative;
}

int cmd_check_proof(const Globals& g, const std::string& proof_path, const std::string& premises_path,
                    const std::string& goal_text, std::ostream& out) {
  PremiseSet premises = parse_premises(read_file(premises_path), declared(g));
  const AttributeUniverse& u = premises.universe();
  Proof proof = proof_from_json(Json::parse(read_file(proof_path)), u);
  ProofCheck check = check_proof(proof, premises);
  if (check.ok && !goal_text.empty()) {
    Atom goal = parse_atom(goal_text, u);
    if (!(proof.conclusion() == goal)) {
      check.ok = false;
      check.failing_path = "root";
      check.reason = "concludes " + proof.conclusion().str(u) + ", not the goal";
    }
  }
  if (g.json) {
    Json j{{"command", "check-proof"}, {"valid", check.ok}, {"concludes", proof.conclusion().str(u)}};
    if (!check.ok) {
      j["failing_path"] = check.failing_path;
      j["reason"] = check.reason;
    }
    emit(out, j);
  } else if (check.ok) {
    out << "valid proof of " << proof.conclusion().str(u) << " (" << proof.node_count() << " nodes)\n";
  } else {
    out << "invalid proof: " << check.failing_path << ": " << check.reason << '\n';
  }
  return check.ok ? kAffirmative : kNegative;
}

int cmd_counterexample(const Globals& g, const std::string& formula_path, const std::string& hypergraph_path,
                       bool materialize, std::ostream& out) {
  LoadedFormula lf = load_formula(formula_path, g);
  const AttributeUniverse& u = lf.universe;
  const Formula& f = lf.formula;
  std::optional<Hypergraph> h;
  if (!hypergraph_path.empty()) {
    h = hypergraph_from_json(Json::parse(read_file(hypergraph_path)));
    if (!(h->vertices() == u)) throw ParseError("hypergraph vertices do not match the formula's attributes");
    if (holds(*h, f, SearchLimits{g.cap_edges})) {
      if (g.json) {
        emit(out, Json{{"command", "counterexample"}, {"formula", to_string(f, u)}, {"counterexample", nullptr}});
      } else {
        out << "formula holds in the given hypergraph; no counterexample\n";
      }
      return kAffirmative;
    }
  } else {
    SatAnswer answer = decide_valid(f, u, g.cap_atoms, SearchLimits{g.cap_edges});
    if (answer.verdict) {
      if (g.json) {
        emit(out, Json{{"command", "counterexample"}, {"formula", to_string(f, u)}, {"counterexample", nullptr}});
      } else {
        out << "formula is valid; no counterexample\n";
      }
      return kAffirmative;
    }
    h = std::move(answer.witness);
  }
  CounterexamplePackage pkg = counterexample_for(*h, f, package_options(g, materialize));
  auto problem = check_package(pkg, f);
  expect(!problem, problem.value_or(""));
  if (g.json) {
    Json j = package_to_json(pkg);
    j["command"] = "counterexample";
    j["formula"] = to_string(f, u);
    emit(out, j);
    return kNegative;
  }
  out << "counterexample hypergraph (depth " << pkg.depth << "):\n";
  print_hypergraph(out, *h);
  for (const AtomFinding& a : pkg.atoms) {
    out << "  " << a.atom.str(u) << ": " << (a.holds ? "true" : "false") << ", minimum budget "
        << (a.min_budget ? a.min_budget->str() : "unreachable");
    if (a.model_holds) out << ", model " << (*a.model_holds ? "true" : "false");
    out << '\n';
    for (const FalseAtomWitness& w : a.witnesses) {
      out << "    buying " << edge_list(w.purchase, *h) << ": cut " << w.cut.left.str(u) << " | "
          << w.cut.right.str(u) << ", flip at " << u.name(w.root) << ", "
          << w.check.flip_equations.checked << " equations checked, "
          << (w.check.ok() ? "all checks pass" : "CHECK FAILED") << '\n';
    }
    if (a.proof) out << "    proof with " << a.proof->node_count() << " nodes\n";
  }
  if (pkg.model)
    out << "materialized model: dimension " << pkg.model->dimension() << " over "
        << pkg.model->coordinates().size() << " path coordinates; formula "
        << (*pkg.model_value ? "true" : "false") << '\n';
  return kNegative;
}

int cmd_mine(const Globals& g, const std::string& model_path, const std::string& csv_path,
             const std::string& costs_path, const std::string& cap_text, std::size_t max_lhs,
             std::ostream& out) {
  InfoModel m = load_model(model_path, csv_path, costs_path);
  Budget cap = Budget::parse(cap_text);
  std::vector<Atom> found = mine_dependencies(m, cap, max_lhs);
  if (g.json) {
    Json list = Json::array();
    for (const Atom& t : found) list.push_back(t.str(m.universe()));
    emit(out, Json{{"command", "mine"}, {"cap", cap.str()}, {"max_lhs", max_lhs}, {"dependencies", list}});
  } else {
    for (const Atom& t : found) out << t.str(m.universe()) << '\n';
  }
  return kAffirmative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reasoning about budget-constrained functional dependencies", "bcfd"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--attrs", g.attrs, "Attribute universe, e.g. a,b,c");
  auto* seed_opt = app.add_option("--seed", seed, "Random-walk equation checks with this seed");
  auto* depth_opt = app.add_option("--depth", depth, "Path depth for equation checks")->check(CLI::PositiveNumber);
  app.add_option("--cap-atoms", g.cap_atoms, "Most distinct atoms in a formula")->check(CLI::PositiveNumber);
  app.add_option("--cap-edges", g.cap_edges, "Most edges in a hypergraph search")->check(CLI::PositiveNumber);

  std::string premises, goal, from, to, formula, proof, model, csv, costs, cap, hypergraph;
  std::string emit_proof, emit_counter;
  std::size_t max_lhs = 2;
  bool materialize = false;
  std::function<int()> action;

  auto* prove = app.add_subcommand("prove", "Decide whether premises entail a goal atom");
  prove->add_option("--premises", premises, "Premise file")->required();
  prove->add_option("--goal", goal, "Goal atom, e.g. \"{a} |3 {c}\"")->required();
  prove->add_option("--emit-proof", emit_proof, "Write the proof as JSON");
  prove->add_option("--emit-counter", emit_counter, "Write the refutation as JSON");
  prove->callback([&] { action = [&] { return cmd_prove(g, premises, goal, emit_proof, emit_counter, out); }; });

  auto* minb = app.add_subcommand("min-budget", "Least budget for a dependency under premises");
  minb->add_option("--premises", premises, "Premise file")->required();
  minb->add_option("--from", from, "Left attribute set")->required();
  minb->add_option("--to", to, "Right attribute set")->required();
  minb->callback([&] { action = [&] { return cmd_min_budget(g, premises, from, to, out); }; });

  for (bool validity : {false, true}) {
    auto* sub = app.add_subcommand(validity ? "valid" : "sat",
                                   validity ? "Decide validity of a formula" : "Decide satisfiability of a formula");
    auto* pos = sub->add_option("file", formula, "Formula file");
    auto* opt = sub->add_option("--formula", formula, "Formula file");
    pos->excludes(opt);
    if (validity) {
      sub->add_option("--emit-counter", emit_counter, "Write a counterexample package as JSON");
      sub->add_flag("--materialize", materialize, "Include a materialized finite model when acyclic");
    }
    sub->callback([&, validity] {
      if (formula.empty()) throw CLI::ValidationError("a formula file is required");
      action = [&, validity] { return cmd_decide(g, validity, formula, emit_counter, materialize, out); };
    });
  }

  auto* check_model = app.add_subcommand("check-model", "Evaluate a formula in a finite model");
  check_model->add_option("--model", model, "Model JSON");
  check_model->add_option("--csv", csv, "CSV table");
  check_model->add_option("--costs", costs, "Cost sidecar (name=cost lines)");
  check_model->add_option("--formula", formula, "Formula file")->required();
  check_model->callback([&] { action = [&] { return cmd_check_model(g, model, csv, costs, formula, out); }; });

  auto* check_proof_cmd = app.add_subcommand("check-proof", "Check a proof against premises");
  check_proof_cmd->add_option("--proof", proof, "Proof JSON")->required();
  check_proof_cmd->add_option("--premises", premises, "Premise file")->required();
  check_proof_cmd->add_option("--goal", goal, "Expected conclusion");
  check_proof_cmd->callback([&] { action = [&] { return cmd_check_proof(g, proof, premises, goal, out); }; });

  auto* counter = app.add_subcommand("counterexample", "Build a checked counterexample package");
  auto* cpos = counter->add_option("file", formula, "Formula file");
  auto* copt = counter->add_option("--formula", formula, "Formula file");
  cpos->excludes(copt);
  counter->add_option("--hypergraph", hypergraph, "Hypergraph JSON to falsify the formula in");
  counter->add_flag("--materialize", materialize, "Include a materialized finite model when acyclic");
  counter->callback([&] {
    if (formula.empty()) throw CLI::ValidationError("a formula file is required");
    action = [&] { return cmd_counterexample(g, formula, hypergraph, materialize, out); };
  });

  auto* mine = app.add_subcommand("mine", "Mine minimal budgeted dependencies from a table");
  mine->add_option("--model", model, "Model JSON");
  mine->add_option("--csv", csv, "CSV table");
  mine->add_option("--costs", costs, "Cost sidecar (name=cost lines)");
  mine->add_option("--cap", cap, "Largest budget considered")->required();
  mine->add_option("--max-lhs", max_lhs, "Largest left-hand side");
  mine->callback([&] { action = [&] { return cmd_mine(g, model, csv, costs, cap, max_lhs, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (seed_opt->count()) g.seed = seed;
  if (depth_opt->count()) g.depth = depth;

  try {
    return action();
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace bcfd::cli
