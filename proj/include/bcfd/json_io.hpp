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

#include <nlohmann/json.hpp>

#include "bcfd/entailment.hpp"
#include "bcfd/hypergraph.hpp"
#include "bcfd/infomodel.hpp"
#include "bcfd/proofs.hpp"
#include "bcfd/synth.hpp"

namespace bcfd {

using Json = nlohmann::json;

/// Budgets and costs are strings ("9/2", "inf"); numbers are accepted on
/// input.
Budget budget_from_json(const Json& j);
ExtendedBudget extended_budget_from_json(const Json& j);

Json names_json(const AttrSet& s, const AttributeUniverse& u);
AttrSet names_from_json(const Json& j, const AttributeUniverse& u);

/// {"vertices":[...], "edges":[{"label","in","out","w"}]}
Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

/// {"rule":"Trans","concludes":"{a} |3 {c}","left":...,"right":...}; Aug
/// nodes carry "sub" and "with".
Json proof_to_json(const Proof& p, const AttributeUniverse& u);
Proof proof_from_json(const Json& j, const AttributeUniverse& u);

/// {"attributes":[{"name","cost"}], "tuples":[[...], ...]}
Json model_to_json(const InfoModel& m);
InfoModel model_from_json(const Json& j);

Json refutation_to_json(const Refutation& r, const Hypergraph& h);
Json assignment_to_json(const Assignment& sigma, const AttributeUniverse& u);
Json equation_report_to_json(const EquationReport& r, const Hypergraph& h);
Json package_to_json(const CounterexamplePackage& pkg);

}  // namespace bcfd
