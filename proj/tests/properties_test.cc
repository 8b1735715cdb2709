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


// Invariants checked exhaustively at small sizes, against the reference
// implementations where one exists.

#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "modsum/analytics.h"
#include "modsum/primes.h"
#include "modsum/protocol.h"
#include "modsum/security.h"
#include "oracles.h"

namespace modsum {
namespace {

TEST(PropertyTest, DistinctSumsMeetLowerBound) {
  for (int p : {2, 3, 5, 7, 11}) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
      const Hand as = Hand::FromMask(mask);
      for (int n = 0; n <= as.size(); ++n) {
        EXPECT_GE(static_cast<int>(DistinctSums(as, n, p).size()),
                  DistinctSumsLowerBound(p, n, as.size()));
      }
    }
  }
}

TEST(PropertyTest, LowerBoundIsTightOnIntervals) {
  for (int d : {5, 7, 11}) {
    for (int a = 1; a < d; ++a) {
      for (int b = 1; a + b < d; ++b) {
        const int len = a + b - 1;
        const int bound = a * len - a * a + 1;
        if (bound > d) continue;
        const std::set<int> ref =
            oracle::DistinctSums(oracle::Cards([&] {
              oracle::Cards xs;
              for (int i = 1; i <= len; ++i) xs.push_back(i);
              return xs;
            }()), a, d);
        EXPECT_EQ(static_cast<int>(ref.size()), std::min(d, bound));
        EXPECT_EQ(DistinctSums(Hand::Range(1, len + 1), a, d).size(),
                  ref.size());
      }
    }
  }
}

TEST(PropertyTest, PrimeCriterionMatchesReferenceOracle) {
  for (int d : {3, 5, 7}) {
    for (int a = 1; a < d - 1; ++a) {
      for (int b = 1; a + b < d; ++b) {
        const int c = d - a - b;
        EXPECT_EQ(PrimeSecurityCriterion(DealSize::Make(a, b, c))
                      .secure_by_theorem,
                  oracle::Secure(a, b, c, d).secure)
            << a << "," << b << "," << c;
      }
    }
  }
}

TEST(PropertyTest, SecurityIsSymmetricInAliceAndBob) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; a + b <= 7; ++b) {
      for (int c = 1; a + b + c <= 8; ++c) {
        const DealSize size = DealSize::Make(a, b, c);
        for (int n = size.d(); n <= size.d() + 2; ++n) {
          EXPECT_EQ(OracleIsSecure(size, n).secure,
                    OracleIsSecure(size.Swapped(), n).secure);
        }
      }
    }
  }
}

TEST(PropertyTest, SecuritySurvivesRemovingCathCards) {
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; a + b <= 8; ++b) {
      for (int c = 2; a + b + c <= 10; ++c) {
        const DealSize size = DealSize::Make(a, b, c);
        for (int n = size.d(); n <= size.d() + 1; ++n) {
          if (!OracleIsSecure(size, n).secure) continue;
          for (int smaller = 1; smaller < c; ++smaller) {
            EXPECT_TRUE(
                OracleIsSecure(DealSize::Make(a, b, smaller), n).secure);
          }
        }
      }
    }
  }
}

TEST(PropertyTest, CathPredictsBobAndOrderDoesNotMatter) {
  const DealSize size = DealSize::Make(3, 2, 2);
  for (int n = size.d(); n <= size.d() + 3; ++n) {
    for (const Deal& deal : EnumerateDeals(size)) {
      const Transcript alice_first = RunProtocol(deal, ProtocolKind::ModSum(n));
      const Transcript bob_first = RunProtocol(deal, ProtocolKind::ModSum(n),
                                               SpeakerOrder::kBobFirst);
      EXPECT_EQ(alice_first.ResidueOf(Agent::kBob),
                PredictBobResidue(size, n, deal.cath(),
                                  alice_first.ResidueOf(Agent::kAlice)));
      const std::vector<Announcement> one(alice_first.announcements.begin(),
                                          alice_first.announcements.end());
      const std::vector<Announcement> two(bob_first.announcements.begin(),
                                          bob_first.announcements.end());
      const std::vector<Announcement> alone = {one[0]};
      const std::vector<Ownership> a = KnownCards({Agent::kCath, deal.cath(),
                                                   size, one});
      EXPECT_EQ(a, KnownCards({Agent::kCath, deal.cath(), size, two}));
      EXPECT_EQ(a, KnownCards({Agent::kCath, deal.cath(), size, alone}));
    }
  }
}

TEST(PropertyTest, WitnessChecksAreSound) {
  for (int a = 2; a <= 4; ++a) {
    for (int b = 2; a + b <= 7; ++b) {
      const DealSize size = DealSize::Make(a, b, 8 - a - b);
      for (int n = 8; n <= 10; ++n) {
        const bool secure = OracleIsSecure(size, n).secure;
        EXPECT_EQ(WitnessIsSecurePerCard(size, n), secure);
        if (WitnessIsSecureAnyK(size, n)) EXPECT_TRUE(secure);
        for (int k = 1; k <= std::min(a, b); ++k) {
          if (WitnessIsSecure(size, n, k)) EXPECT_TRUE(secure);
        }
      }
    }
  }
}

TEST(PropertyTest, RecommendationsAreSecureAndInformative) {
  for (int a = 3; a <= 5; ++a) {
    for (int b = 3; a + b + 1 <= 9; ++b) {
      const Recommendation r = RecommendProtocol(a, b);
      EXPECT_TRUE(OracleIsSecure(r.size, r.modulus).secure);
      EXPECT_TRUE(OracleIsInformative(r.size, r.modulus).informative);
    }
  }
}

TEST(PropertyTest, RandomHandsRoundTrip) {
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 2000; ++i) {
    const Hand h = Hand::FromMask(rng());
    EXPECT_EQ(Hand::Parse(h.ToString()), h);
    EXPECT_EQ(Hand::FromCards(h.Cards()), h);
    std::int64_t sum = 0;
    for (Card c : h.Cards()) sum += c;
    EXPECT_EQ(h.Sum(), sum);
  }
}

TEST(PropertyTest, LeastPrimeIsMinimal) {
  for (std::int64_t n = 2; n < 5000; ++n) {
    const std::int64_t p = LeastPrimeGeq(n);
    for (std::int64_t q = n; q < p; ++q) EXPECT_FALSE(oracle::IsPrime(q));
    EXPECT_TRUE(oracle::IsPrime(p));
  }
}

}  // namespace
}  // namespace modsum
