// Copyright 2026 The ModSum Cards Authors. All rights reserved.
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

#include "modsum/serialize.h"

#include <string>

namespace modsum {

Json ToJson(Hand hand) { return Json(hand.Cards()); }

Json ToJson(DealSize size) {
  return Json{{"a", size.a()}, {"b", size.b()}, {"c", size.c()}};
}

Json ToJson(const Deal& deal) {
  return Json{{"alice", ToJson(deal.alice())},
              {"bob", ToJson(deal.bob())},
              {"cath", ToJson(deal.cath())}};
}

Json ToJson(const Transcript& transcript) {
  return Json{{"size", ToJson(transcript.size)},
              {"protocol", transcript.kind.ToString()},
              {"modulus", transcript.modulus()},
              {"alice_residue", transcript.ResidueOf(Agent::kAlice)},
              {"bob_residue", transcript.ResidueOf(Agent::kBob)}};
}

Json ToJson(const Ownership& ownership) {
  return Json{{"card", ownership.card},
              {"owner", std::string(AgentName(ownership.owner))}};
}

Json ToJson(const SecurityVerdict& verdict) {
  Json out{{"secure", verdict.secure}};
  if (verdict.counterexample) {
    out["deal"] = ToJson(verdict.counterexample->deal);
    out["leaked_card"] = verdict.counterexample->card;
    out["owner"] = std::string(AgentName(verdict.counterexample->owner));
  }
  return out;
}

Json ToJson(const InformativityVerdict& verdict) {
  Json out{{"informative", verdict.informative}};
  if (verdict.counterexample) {
    out["deal"] = ToJson(verdict.counterexample->deal);
    out["alternative"] = ToJson(verdict.counterexample->alternative);
    out["observer"] = std::string(AgentName(verdict.counterexample->observer));
  }
  return out;
}

Json ToJson(const TeoabResult& result) {
  Json out{{"holds", result.holds}};
  if (result.counterexample) {
    out["residue"] = result.counterexample->residue;
    out["pool"] = ToJson(result.counterexample->pool);
    out["side"] = std::string(AgentName(result.counterexample->side));
  }
  return out;
}

Json ToJson(const CriterionReport& report) {
  return Json{{"size", ToJson(report.size)},
              {"d", report.size.d()},
              {"d_prime", report.d_prime},
              {"ineq_a", report.ineq_a},
              {"ineq_b", report.ineq_b},
              {"secure_by_theorem", report.secure_by_theorem}};
}

Json ToJson(const Recommendation& recommendation) {
  return Json{{"size", ToJson(recommendation.size)},
              {"protocol", recommendation.protocol.ToString()},
              {"modulus", recommendation.modulus},
              {"justification",
               std::string(JustificationName(recommendation.justification))}};
}

Json ToJson(const std::vector<PaddingPrimeRow>& rows) {
  Json out = Json::array();
  for (const PaddingPrimeRow& row : rows) {
    out.push_back(Json{
        {"a", row.a}, {"p", row.p}, {"two_a_plus_1", row.two_a_plus_1}});
  }
  return out;
}

}  // namespace modsum
