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

#include "gtest/gtest.h"
#include "modsum/errors.h"

namespace modsum {
namespace {

Hand H(const char* text) { return Hand::Parse(text); }

TEST(ProtocolKindTest, ParseAndFormat) {
  EXPECT_EQ(ProtocolKind::Parse("dmodsum"), ProtocolKind::DModSum());
  EXPECT_EQ(ProtocolKind::Parse("lpmodsum"), ProtocolKind::LPModSum());
  EXPECT_EQ(ProtocolKind::Parse("modsum:11"), ProtocolKind::ModSum(11));
  EXPECT_EQ(ProtocolKind::ModSum(11).ToString(), "modsum:11");
  EXPECT_THROW(ProtocolKind::Parse("modsum"), UsageError);
  EXPECT_THROW(ProtocolKind::Parse("modsum:x"), UsageError);
  EXPECT_THROW(ProtocolKind::Parse("sum"), UsageError);
}

TEST(ResolveModulusTest, Examples) {
  EXPECT_EQ(ResolveModulus(ProtocolKind::DModSum(), DealSize::Make(4, 3, 1)), 8);
  EXPECT_EQ(ResolveModulus(ProtocolKind::LPModSum(), DealSize::Make(4, 3, 1)),
            11);
  EXPECT_EQ(ResolveModulus(ProtocolKind::LPModSum(), DealSize::Make(3, 3, 1)),
            7);
  EXPECT_EQ(ResolveModulus(ProtocolKind::ModSum(9), DealSize::Make(3, 3, 1)), 9);
  EXPECT_THROW(ResolveModulus(ProtocolKind::ModSum(7), DealSize::Make(4, 3, 1)),
               DomainError);
}

TEST(RunProtocolTest, Examples) {
  Transcript t = RunProtocol(Deal::FromHands(H("0,1,2"), H("3,4,5"), H("6")),
                             ProtocolKind::ModSum(7));
  EXPECT_EQ(t.announcements[0], (Announcement{Agent::kAlice, 7, 3}));
  EXPECT_EQ(t.announcements[1], (Announcement{Agent::kBob, 7, 5}));

  t = RunProtocol(Deal::FromHands(H("0,1,2,3"), H("4,5,6"), H("7")),
                  ProtocolKind::LPModSum());
  EXPECT_EQ(t.modulus(), 11);
  EXPECT_EQ(t.ResidueOf(Agent::kAlice), 6);

  t = RunProtocol(Deal::FromHands(H("0,1"), H("2,5"), H("3,4")),
                  ProtocolKind::ModSum(6));
  EXPECT_EQ(t.ResidueOf(Agent::kAlice), 1);
}

TEST(RunProtocolTest, BobFirstSwapsSpeakers) {
  const Deal deal = Deal::FromHands(H("0,1,2"), H("3,4,5"), H("6"));
  const Transcript t =
      RunProtocol(deal, ProtocolKind::DModSum(), SpeakerOrder::kBobFirst);
  EXPECT_EQ(t.announcements[0].speaker, Agent::kBob);
  EXPECT_EQ(t.ResidueOf(Agent::kAlice), 3);
  EXPECT_EQ(t.ResidueOf(Agent::kBob), 5);
}

TEST(PredictBobResidueTest, Examples) {
  EXPECT_EQ(PredictBobResidue(DealSize::Make(3, 3, 1), 7, H("6"), 3), 5);
  EXPECT_EQ(PredictBobResidue(DealSize::Make(4, 3, 1), 8, H("7"), 6), 7);
  const Transcript t =
      RunProtocol(Deal::FromHands(H("0,1,2,3"), H("4,5,6"), H("7")),
                  ProtocolKind::DModSum());
  EXPECT_EQ(t.ResidueOf(Agent::kBob), 7);
  EXPECT_THROW(PredictBobResidue(DealSize::Make(4, 3, 1), 7, H("7"), 6),
               DomainError);
  EXPECT_THROW(PredictBobResidue(DealSize::Make(4, 3, 1), 8, H("6,7"), 6),
               UsageError);
}

}  // namespace
}  // namespace modsum
