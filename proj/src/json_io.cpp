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

#include "bcfd/json_io.hpp"

#include "bcfd/error.hpp"

namespace bcfd {

namespace {

std::string scalar_text(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  throw ParseError(std::string(what) + " must be a string or an integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json edge_names(const EdgeSet& f, const Hypergraph& h) {
  Json out = Json::array();
  for (EdgeId e : f.members()) out.push_back(h.edge_name(e));
  return out;
}

}  // namespace

Budget budget_from_json(const Json& j) { return Budget::parse(scalar_text(j, "budget")); }

ExtendedBudget extended_budget_from_json(const Json& j) {
  return ExtendedBudget::parse(scalar_text(j, "cost"));
}

Json names_json(const AttrSet& s, const AttributeUniverse& u) {
  Json out = Json::array();
  for (std::size_t a : s.members()) out.push_back(u.name(a));
  return out;
}

AttrSet names_from_json(const Json& j, const AttributeUniverse& u) {
  if (!j.is_array()) throw ParseError("attribute list must be an array");
  AttrSet s(u.size());
  for (const Json& name : j) {
    if (!name.is_string()) throw ParseError("attribute names must be strings");
    auto a = u.find(name.get<std::string>());
    if (!a) throw ParseError("unknown attribute '" + name.get<std::string>() + "'");
    s.insert(*a);
  }
  return s;
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Edge& edge = h.edge(e);
    Json je{{"in", names_json(edge.tails, h.vertices())},
            {"out", names_json(edge.heads, h.vertices())},
            {"w", edge.weight.str()}};
    if (!edge.label.empty()) je["label"] = edge.label;
    edges.push_back(std::move(je));
  }
  return Json{{"vertices", h.vertices().names()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) throw ParseError("'vertices' must be an array");
  std::vector<std::string> names;
  for (const Json& v : vs) {
    if (!v.is_string()) throw ParseError("vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  AttributeUniverse u(std::move(names));
  std::vector<Edge> edges;
  const Json& es = field(j, "edges");
  if (!es.is_array()) throw ParseError("'edges' must be an array");
  for (const Json& e : es) {
    Edge edge{names_from_json(field(e, "in"), u), names_from_json(field(e, "out"), u),
              budget_from_json(field(e, "w")), {}};
    if (e.contains("label")) edge.label = scalar_text(e.at("label"), "label");
    edges.push_back(std::move(edge));
  }
  return Hypergraph(std::move(u), std::move(edges));
}

Json proof_to_json(const Proof& p, const AttributeUniverse& u) {
  Json j{{"rule", rule_name(p.rule())}, {"concludes", p.conclusion().str(u)}};
  switch (p.rule()) {
    case Proof::Rule::kPremise:
    case Proof::Rule::kReflexivity:
      break;
    case Proof::Rule::kAugmentation:
      j["sub"] = proof_to_json(p.children().at(0), u);
      j["with"] = p.with().str(u);
      break;
    case Proof::Rule::kTransitivity:
      j["left"] = proof_to_json(p.children().at(0), u);
      j["right"] = proof_to_json(p.children().at(1), u);
      break;
  }
  return j;
}

Proof proof_from_json(const Json& j, const AttributeUniverse& u) {
  const std::string rule = scalar_text(field(j, "rule"), "rule");
  Atom conclusion = parse_atom(scalar_text(field(j, "concludes"), "conclusion"), u);
  if (rule == "Premise") return Proof::claimed(Proof::Rule::kPremise, std::move(conclusion));
  if (rule == "Refl") return Proof::claimed(Proof::Rule::kReflexivity, std::move(conclusion));
  if (rule == "Aug") {
    AttrSet with = parse_attr_set(scalar_text(field(j, "with"), "with"), u);
    return Proof::claimed(Proof::Rule::kAugmentation, std::move(conclusion),
                          {proof_from_json(field(j, "sub"), u)}, std::move(with));
  }
  if (rule == "Trans")
    return Proof::claimed(Proof::Rule::kTransitivity, std::move(conclusion),
                          {proof_from_json(field(j, "left"), u), proof_from_json(field(j, "right"), u)});
  throw ParseError("unknown proof rule '" + rule + "'");
}

Json model_to_json(const InfoModel& m) {
  Json attrs = Json::array();
  for (std::size_t a = 0; a < m.universe().size(); ++a)
    attrs.push_back(Json{{"name", m.universe().name(a)}, {"cost", m.cost(a).str()}});
  Json tuples = Json::array();
  for (std::size_t t = 0; t < m.tuples().size(); ++t) {
    Json row = Json::array();
    for (std::size_t a = 0; a < m.universe().size(); ++a) row.push_back(m.value(t, a));
    tuples.push_back(std::move(row));
  }
  return Json{{"attributes", std::move(attrs)}, {"tuples", std::move(tuples)}};
}

InfoModel model_from_json(const Json& j) {
  const Json& attrs = field(j, "attributes");
  if (!attrs.is_array()) throw ParseError("'attributes' must be an array");
  std::vector<std::string> names;
  std::vector<ExtendedBudget> costs;
  for (const Json& a : attrs) {
    names.push_back(scalar_text(field(a, "name"), "name"));
    costs.push_back(extended_budget_from_json(field(a, "cost")));
  }
  AttributeUniverse u(std::move(names));
  const Json& ts = field(j, "tuples");
  if (!ts.is_array()) throw ParseError("'tuples' must be an array");
  std::vector<std::vector<std::string>> rows;
  for (const Json& t : ts) {
    if (!t.is_array() || t.size() != u.size())
      throw ParseError("tuple " + std::to_string(rows.size()) + " must list one value per attribute");
    std::vector<std::string> row;
    for (const Json& v : t) row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("a model needs at least one tuple");
  return InfoModel(std::move(u), std::move(costs), rows);
}

Json refutation_to_json(const Refutation& r, const Hypergraph& h) {
  Json cuts = Json::array();
  for (const PurchaseCut& pc : r.cuts)
    cuts.push_back(Json{{"purchase", edge_names(pc.purchase, h)},
                        {"left", names_json(pc.cut.left, h.vertices())},
                        {"right", names_json(pc.cut.right, h.vertices())},
                        {"root", h.vertices().name(pc.root)}});
  return Json{{"min_budget", r.min_budget ? Json(r.min_budget->str()) : Json(nullptr)},
              {"cuts", std::move(cuts)}};
}

Json assignment_to_json(const Assignment& sigma, const AttributeUniverse& u) {
  Json out = Json::array();
  for (const auto& [atom, value] : sigma) out.push_back(Json{{"atom", atom.str(u)}, {"value", value}});
  return out;
}

Json equation_report_to_json(const EquationReport& r, const Hypergraph& h) {
  Json violations = Json::array();
  for (const Path& p : r.violations) violations.push_back(p.str(h));
  return Json{{"checked", r.checked},
              {"outside_tree", r.cases[0]},
              {"tree_crossing", r.cases[1]},
              {"tree_non_crossing", r.cases[2]},
              {"violations", std::move(violations)}};
}

Json package_to_json(const CounterexamplePackage& pkg) {
  const Hypergraph& h = pkg.hypergraph;
  const AttributeUniverse& u = h.vertices();
  Json atoms = Json::array();
  for (const AtomFinding& a : pkg.atoms) {
    Json ja{{"atom", a.atom.str(u)},
            {"holds", a.holds},
            {"min_budget", a.min_budget ? Json(a.min_budget->str()) : Json(nullptr)}};
    if (a.proof) ja["proof"] = proof_to_json(*a.proof, u);
    if (!a.holds) {
      Json ws = Json::array();
      for (const FalseAtomWitness& w : a.witnesses) {
        Json choice = Json::object();
        for (EdgeId e = 0; e < h.edge_count(); ++e)
          if (w.choice.tail_choice[e]) choice[h.edge_name(e)] = u.name(*w.choice.tail_choice[e]);
        ws.push_back(Json{
            {"purchase", edge_names(w.purchase, h)},
            {"cut", Json{{"left", names_json(w.cut.left, u)}, {"right", names_json(w.cut.right, u)}}},
            {"root", u.name(w.root)},
            {"crossing", edge_names(w.choice.crossing, h)},
            {"choice", std::move(choice)},
            {"checks", Json{{"left_unflipped", w.check.left_unflipped},
                            {"non_crossing_unflipped", w.check.non_crossing_unflipped},
                            {"root_flipped", w.check.root_flipped},
                            {"zero_equations", equation_report_to_json(w.check.zero_equations, h)},
                            {"flip_equations", equation_report_to_json(w.check.flip_equations, h)}}}});
      }
      ja["witnesses"] = std::move(ws);
    }
    if (a.model_holds) ja["model_holds"] = *a.model_holds;
    atoms.push_back(std::move(ja));
  }
  Json out{{"hypergraph", hypergraph_to_json(h)}, {"depth", pkg.depth}, {"atoms", std::move(atoms)}};
  if (pkg.model) {
    Json jm{{"dimension", pkg.model->dimension()},
            {"coordinates", pkg.model->coordinates().size()},
            {"equations", pkg.model->equation_count()},
            {"formula_value", *pkg.model_value},
            {"finite_formula_value", *pkg.finite_model_value}};
    try {
      jm["explicit"] = model_to_json(pkg.model->to_info_model());
    } catch (const CapExceeded&) {
      jm["explicit"] = nullptr;
    }
    out["model"] = std::move(jm);
  }
  return out;
}

}  // namespace bcfd
