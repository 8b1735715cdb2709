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

#ifndef MODSUM_SERIALIZE_H_
#define MODSUM_SERIALIZE_H_

// JSON records for the CLI. Key order is fixed (nlohmann::ordered_json), so
// dump() output is stable byte-for-byte.

#include <vector>

#include "json.hpp"
#include "modsum/analytics.h"
#include "modsum/deck.h"
#include "modsum/protocol.h"
#include "modsum/security.h"

namespace modsum {

using Json = nlohmann::ordered_json;

Json ToJson(Hand hand);
Json ToJson(DealSize size);
Json ToJson(const Deal& deal);
// {size, protocol, modulus, alice_residue, bob_residue}
Json ToJson(const Transcript& transcript);
Json ToJson(const Ownership& ownership);
// {secure, deal?, leaked_card?, owner?}
Json ToJson(const SecurityVerdict& verdict);
// {informative, deal?, alternative?, observer?}
Json ToJson(const InformativityVerdict& verdict);
Json ToJson(const TeoabResult& result);
Json ToJson(const CriterionReport& report);
Json ToJson(const Recommendation& recommendation);
Json ToJson(const std::vector<PaddingPrimeRow>& rows);

}  // namespace modsum

#endif  // MODSUM_SERIALIZE_H_
