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

#include "modsum/protocol.h"

#include <charconv>

#include "modsum/errors.h"
#include "modsum/primes.h"

namespace modsum {

ProtocolKind ProtocolKind::Parse(const std::string& text) {
  if (text == "dmodsum") return DModSum();
  if (text == "lpmodsum") return LPModSum();
  const std::string prefix = "modsum:";
  if (text.rfind(prefix, 0) == 0) {
    int n = 0;
    const char* begin = text.data() + prefix.size();
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, n);
    if (ec == std::errc() && ptr == end && begin != end) return ModSum(n);
  }
  throw UsageError("unknown protocol '" + text +
                   "' (expected dmodsum, lpmodsum or modsum:<n>)");
}

std::string ProtocolKind::ToString() const {
  switch (family_) {
    case Family::kDModSum:
      return "dmodsum";
    case Family::kLPModSum:
      return "lpmodsum";
    case Family::kModSum:
      return "modsum:" + std::to_string(modulus_);
  }
  return "?";
}

int ResolveModulus(ProtocolKind kind, DealSize size) {
  switch (kind.family()) {
    case ProtocolKind::Family::kDModSum:
      return size.d();
    case ProtocolKind::Family::kLPModSum:
      return static_cast<int>(LeastPrimeGeq(size.d()));
    case ProtocolKind::Family::kModSum:
      if (kind.explicit_modulus() < size.d()) {
        throw DomainError("modulus " + std::to_string(kind.explicit_modulus()) +
                          " is smaller than the deck size " +
                          std::to_string(size.d()));
      }
      return kind.explicit_modulus();
  }
  throw VerifierError("unhandled protocol family");
}

int Transcript::ResidueOf(Agent speaker) const {
  for (const Announcement& a : announcements) {
    if (a.speaker == speaker) return a.residue;
  }
  throw UsageError("agent " + std::string(AgentName(speaker)) +
                   " does not announce");
}

Transcript RunProtocol(const Deal& deal, ProtocolKind kind, SpeakerOrder order) {
  const int n = ResolveModulus(kind, deal.size());
  Announcement alice{Agent::kAlice, n, SumMod(deal.alice(), n)};
  Announcement bob{Agent::kBob, n, SumMod(deal.bob(), n)};
  if (order == SpeakerOrder::kBobFirst) return {deal.size(), kind, {bob, alice}};
  return {deal.size(), kind, {alice, bob}};
}

int PredictBobResidue(DealSize size, int modulus, Hand cath, int alice_residue) {
  if (modulus < size.d()) {
    throw DomainError("modulus must be at least the deck size");
  }
  if (cath.size() != size.c()) {
    throw UsageError("Cath's hand must hold " + std::to_string(size.c()) +
                     " cards");
  }
  const int deck = SumMod(size.Deck(), modulus);
  const int r = (deck - alice_residue - SumMod(cath, modulus)) % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace modsum
