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


#include "modsum/analytics.h"

#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "modsum/errors.h"
#include "modsum/primes.h"
#include "oracles.h"

namespace modsum {
namespace {

Hand H(const char* text) { return Hand::Parse(text); }

TEST(ConstructSubsetWithSumTest, Examples) {
  EXPECT_EQ(ConstructSubsetWithSum(1, 11, 4), H("4"));
  EXPECT_EQ(ConstructSubsetWithSum(3, 11, 5), H("1,5,10"));
  EXPECT_EQ(ConstructSubsetWithSum(4, 11, 5), H("0,1,5,10"));
  // x = 0, even t: pairs only, 0 is never repeated.
  EXPECT_EQ(ConstructSubsetWithSum(2, 11, 0), H("1,10"));
  EXPECT_THROW(ConstructSubsetWithSum(0, 11, 5), DomainError);
  EXPECT_THROW(ConstructSubsetWithSum(9, 11, 5), DomainError);
  EXPECT_THROW(ConstructSubsetWithSum(3, 11, 11), UsageError);
}

TEST(ConstructSubsetWithSumTest, AllSmallModuli) {
  for (int d = 4; d <= 20; ++d) {
    for (int t = 1; t < d - 2; ++t) {
      for (int x = 0; x < d; ++x) {
        const Hand h = ConstructSubsetWithSum(t, d, x);
        EXPECT_EQ(h.size(), t) << d << " " << t << " " << x;
        EXPECT_EQ(SumMod(h, d), x) << d << " " << t << " " << x;
        EXPECT_TRUE(h.IsSubsetOf(Hand::Range(0, d)));
      }
    }
  }
}

TEST(DistinctSumsTest, Examples) {
  EXPECT_EQ(DistinctSums(H("1,2,3,4,5"), 3, 7).size(), 7u);
  EXPECT_EQ(DistinctSums(H("0,1,2"), 2, 5), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(DistinctSums(H("1,4,6"), 1, 7), (std::vector<int>{1, 4, 6}));
  EXPECT_EQ(DistinctSums(H("1,4,6"), 0, 7), (std::vector<int>{0}));
  EXPECT_TRUE(DistinctSums(H("1,4"), 3, 7).empty());
  EXPECT_THROW(DistinctSums(H("1,9"), 1, 7), UsageError);
}

TEST(DistinctSumsTest, MatchesReference) {
  const int p = 11;
  for (const oracle::Cards& as : oracle::Subsets(5, oracle::Range(p))) {
    for (int n = 0; n <= 5; ++n) {
      const std::set<int> ref = oracle::DistinctSums(as, n, p);
      EXPECT_EQ(DistinctSums(Hand::FromCards(as), n, p),
                std::vector<int>(ref.begin(), ref.end()));
    }
  }
}

TEST(DistinctSumsLowerBoundTest, Examples) {
  EXPECT_EQ(DistinctSumsLowerBound(7, 3, 5), 7);
  EXPECT_EQ(DistinctSumsLowerBound(5, 2, 3), 3);
  EXPECT_EQ(DistinctSumsLowerBound(13, 0, 4), 1);
  EXPECT_EQ(DistinctSumsLowerBound(5, 0, 0), 1);
  EXPECT_THROW(DistinctSumsLowerBound(8, 2, 3), DomainError);
  EXPECT_THROW(DistinctSumsLowerBound(7, 4, 3), DomainError);
  EXPECT_THROW(DistinctSumsLowerBound(7, 2, 8), DomainError);
}

TEST(PrimeSecurityCriterionTest, Examples) {
  CriterionReport r = PrimeSecurityCriterion(DealSize::Make(3, 3, 1));
  EXPECT_TRUE(r.d_prime);
  EXPECT_EQ(r.ineq_a, 0);
  EXPECT_EQ(r.ineq_b, 0);
  EXPECT_TRUE(r.secure_by_theorem);

  r = PrimeSecurityCriterion(DealSize::Make(2, 4, 1));
  EXPECT_EQ(r.ineq_b, -2);
  EXPECT_FALSE(r.secure_by_theorem);

  r = PrimeSecurityCriterion(DealSize::Make(3, 3, 5));
  EXPECT_EQ(r.ineq_a, -4);
  EXPECT_FALSE(r.secure_by_theorem);

  r = PrimeSecurityCriterion(DealSize::Make(4, 3, 1));
  EXPECT_FALSE(r.d_prime);
  EXPECT_FALSE(r.secure_by_theorem);
}

TEST(RecommendProtocolTest, Examples) {
  Recommendation r = RecommendProtocol(3, 3);
  EXPECT_EQ(r.modulus, 7);
  EXPECT_EQ(r.justification, Justification::kPrimeDeck);

  r = RecommendProtocol(4, 3);
  EXPECT_EQ(r.modulus, 8);
  EXPECT_EQ(r.protocol, ProtocolKind::DModSum());
  EXPECT_EQ(r.justification, Justification::kSpecialCase431);
  EXPECT_EQ(RecommendProtocol(3, 4).justification,
            Justification::kSpecialCase431);

  r = RecommendProtocol(5, 3);
  EXPECT_EQ(r.modulus, 11);
  EXPECT_EQ(r.protocol, ProtocolKind::LPModSum());
  EXPECT_EQ(r.justification, Justification::kPaddedPrime);

  EXPECT_EQ(JustificationName(Justification::kPaddedPrime), "padded_prime");
  EXPECT_THROW(RecommendProtocol(2, 5), DomainError);
  EXPECT_THROW(RecommendProtocol(5, 2), DomainError);
}

TEST(PadToPrimeDeckTest, Examples) {
  Padding pad = PadToPrimeDeck(5, 4);
  EXPECT_EQ(pad.p, 11);
  EXPECT_EQ(pad.c_pad, 2);
  EXPECT_EQ(pad.report.ineq_a, 5);
  EXPECT_EQ(pad.report.ineq_b, 6);

  pad = PadToPrimeDeck(6, 3);
  EXPECT_EQ(pad.p, 11);
  EXPECT_EQ(pad.c_pad, 2);
  EXPECT_EQ(pad.report.ineq_a, 2);
  EXPECT_EQ(pad.report.ineq_b, 5);

  try {
    PadToPrimeDeck(4, 3);
    FAIL() << "expected PaddingError";
  } catch (const PaddingError& e) {
    EXPECT_EQ(e.report().size, DealSize::Make(4, 3, 4));
    EXPECT_EQ(e.report().ineq_a, -2);
  }
  EXPECT_THROW(PadToPrimeDeck(3, 3), DomainError);
}

TEST(PaddingPrimeTableTest, Rows) {
  const std::vector<PaddingPrimeRow> rows = PaddingPrimeTable();
  const int expected[][2] = {{5, 11},  {6, 11},  {8, 13},  {10, 17},
                             {11, 17}, {12, 17}, {14, 19}, {16, 23},
                             {17, 23}, {18, 23}, {20, 29}};
  ASSERT_EQ(rows.size(), std::size(expected));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].a, expected[i][0]);
    EXPECT_EQ(rows[i].p, expected[i][1]);
    EXPECT_EQ(rows[i].two_a_plus_1, 2 * rows[i].a + 1);
    EXPECT_LE(rows[i].p, rows[i].two_a_plus_1);
    EXPECT_EQ(rows[i].p, oracle::NextPrime(rows[i].a + 5));
  }
  const std::string csv = PaddingPrimeTableCsv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "a,p,two_a_plus_1");
  EXPECT_NE(csv.find("\n14,19,29\n"), std::string::npos);
}

}  // namespace
}  // namespace modsum
