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

#ifndef MODSUM_PROTOCOL_H_
#define MODSUM_PROTOCOL_H_

// Modular-sum announcement protocols. Alice and Bob each publicly announce
// the sum of their cards modulo some n >= d:
//
//   ModSum(n)   explicit modulus
//   DModSum     n = d
//   LPModSum    n = least prime >= d

#include <array>
#include <string>

#include "modsum/deck.h"

namespace modsum {

class ProtocolKind {
 public:
  enum class Family { kModSum, kDModSum, kLPModSum };

  static ProtocolKind ModSum(int modulus) {
    return ProtocolKind(Family::kModSum, modulus);
  }
  static ProtocolKind DModSum() { return ProtocolKind(Family::kDModSum, 0); }
  static ProtocolKind LPModSum() { return ProtocolKind(Family::kLPModSum, 0); }
  // "dmodsum", "lpmodsum" or "modsum:<n>". Throws UsageError otherwise.
  static ProtocolKind Parse(const std::string& text);

  Family family() const { return family_; }
  // Only meaningful for Family::kModSum.
  int explicit_modulus() const { return modulus_; }
  std::string ToString() const;

  bool operator==(const ProtocolKind&) const = default;

 private:
  ProtocolKind(Family family, int modulus) : family_(family), modulus_(modulus) {}
  Family family_;
  int modulus_;
};

// Concrete modulus for a size. ModSum(n) with n < d is a DomainError.
int ResolveModulus(ProtocolKind kind, DealSize size);

struct Announcement {
  Agent speaker;
  int modulus;
  int residue;

  bool operator==(const Announcement&) const = default;
};

enum class SpeakerOrder { kAliceFirst, kBobFirst };

// Both announcements of one protocol run, in speaking order.
struct Transcript {
  DealSize size;
  ProtocolKind kind;
  std::array<Announcement, 2> announcements;

  int modulus() const { return announcements[0].modulus; }
  int ResidueOf(Agent speaker) const;
};

Transcript RunProtocol(const Deal& deal, ProtocolKind kind,
                       SpeakerOrder order = SpeakerOrder::kAliceFirst);

// What Cath can infer Bob will announce once she has heard Alice:
// (sum(D) - alice_residue - sum(cath)) mod n.
int PredictBobResidue(DealSize size, int modulus, Hand cath, int alice_residue);

}  // namespace modsum

#endif  // MODSUM_PROTOCOL_H_
