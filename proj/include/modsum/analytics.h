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

#ifndef MODSUM_ANALYTICS_H_
#define MODSUM_ANALYTICS_H_

// Closed-form security criteria for sum announcements and the protocol
// recommender for deals of size (a, b, 1).

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modsum/deck.h"
#include "modsum/errors.h"
#include "modsum/protocol.h"

namespace modsum {

// A t-element subset of Z/(d) summing to x, for 0 < t < d - 2.
//
// Odd t: {x} plus (t-1)/2 pairs {c, d-c}, taking c = 1, 2, ... and skipping
// c = d/2 and c = +-x. Even t: the odd set for t-1 plus {0}. When x = 0 and
// t is even the odd set already contains 0, so t/2 pairs are used instead.
// Throws DomainError outside the range of t.
Hand ConstructSubsetWithSum(int t, int modulus, int x);

// S^n(A): residues mod `modulus` of sums of n distinct elements of A.
// Sorted ascending; empty when n > |A|.
std::vector<int> DistinctSums(Hand elements, int n, int modulus);

// min(p, n * a_size - n^2 + 1) for prime p. DomainError if p is composite
// or the counts violate 0 <= n <= a_size <= p.
int DistinctSumsLowerBound(int p, int n, int a_size);

struct CriterionReport {
  DealSize size;
  bool d_prime;
  // ab - 2a - b - c + 1: Cath stays ignorant of Alice's cards iff >= 0.
  int ineq_a;
  // ab - 2b - a - c + 1: the same for Bob's cards.
  int ineq_b;
  bool secure_by_theorem;
};

// Evaluates the prime-deck criterion. Total: composite d just reports
// d_prime = false and secure_by_theorem = false.
CriterionReport PrimeSecurityCriterion(DealSize size);

enum class Justification {
  kPrimeDeck,         // a+b+1 is prime and a, b > 2
  kPaddedPrime,       // secure at (a, b, p - a - b), hence at (a, b, 1)
  kSpecialCase431,    // (4,3,1) / (3,4,1): DModSum, checked exhaustively
};

std::string_view JustificationName(Justification justification);

struct Recommendation {
  DealSize size;
  int modulus;
  ProtocolKind protocol;
  Justification justification;
};

// Secure and informative sum protocol for size (a, b, 1), a, b >= 3.
// Throws DomainError for a < 3 or b < 3.
Recommendation RecommendProtocol(int a, int b);

struct Padding {
  int p;
  int c_pad;
  CriterionReport report;
};

// Raised when the padded size does not satisfy the criterion.
class PaddingError : public DomainError {
 public:
  PaddingError(const std::string& what, CriterionReport report)
      : DomainError(what), report_(report) {}
  const CriterionReport& report() const { return report_; }

 private:
  CriterionReport report_;
};

// For a+b+1 composite and a, b >= 3: p = least prime > a+b+1 and
// c_pad = p - (a+b). The criterion at (a, b, c_pad) is evaluated, and a
// PaddingError is thrown when it fails (this happens exactly for (4,3)).
// DomainError if a+b+1 is prime or a or b < 3.
Padding PadToPrimeDeck(int a, int b);

struct PaddingPrimeRow {
  int a;
  int p;
  int two_a_plus_1;
};

// For 4 < a <= 20 with a+4 composite: the least prime p > a+4.
std::vector<PaddingPrimeRow> PaddingPrimeTable();

// "a,p,two_a_plus_1" header plus one line per row.
std::string PaddingPrimeTableCsv(const std::vector<PaddingPrimeRow>& rows);

}  // namespace modsum

#endif  // MODSUM_ANALYTICS_H_
