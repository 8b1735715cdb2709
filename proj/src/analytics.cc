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

#include <algorithm>
#include <sstream>

#include "modsum/primes.h"

namespace modsum {

Hand ConstructSubsetWithSum(int t, int modulus, int x) {
  if (modulus < 1 || modulus > kMaxDeckSize) {
    throw UsageError("modulus must lie in [1, 64]");
  }
  if (x < 0 || x >= modulus) {
    throw UsageError("target residue must lie in [0, modulus)");
  }
  if (t <= 0 || t >= modulus - 2) {
    throw DomainError("subset size t must satisfy 0 < t < d - 2");
  }

  // Pairs {c, -c} with c != -c and c != +-x, ascending in c.
  std::vector<int> pair_reps;
  for (int c = 1; 2 * c < modulus; ++c) {
    if (c == x || modulus - c == x) continue;
    pair_reps.push_back(c);
  }

  const bool odd = t % 2 == 1;
  std::vector<Card> cards;
  int pairs_needed = 0;
  if (odd) {
    cards.push_back(x);
    pairs_needed = (t - 1) / 2;
  } else if (x != 0) {
    cards = {x, 0};
    pairs_needed = (t - 2) / 2;
  } else {
    pairs_needed = t / 2;
  }
  if (pairs_needed > static_cast<int>(pair_reps.size())) {
    throw VerifierError("not enough {c, -c} pairs for the construction");
  }
  for (int i = 0; i < pairs_needed; ++i) {
    cards.push_back(pair_reps[i]);
    cards.push_back(modulus - pair_reps[i]);
  }
  return Hand::FromCards(cards);
}

std::vector<int> DistinctSums(Hand elements, int n, int modulus) {
  if (modulus < 1) throw UsageError("modulus must be >= 1");
  if (!elements.empty() && elements.Cards().back() >= modulus) {
    throw UsageError("elements must be residues below the modulus");
  }
  if (n < 0 || n > elements.size()) return {};

  // reach[k][r]: some k distinct elements seen so far sum to r.
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(modulus, 0));
  reach[0][0] = 1;
  int seen = 0;
  for (Card e : elements.Cards()) {
    ++seen;
    for (int k = std::min(n, seen); k >= 1; --k) {
      for (int r = 0; r < modulus; ++r) {
        if (reach[k - 1][r]) reach[k][(r + e) % modulus] = 1;
      }
    }
  }
  std::vector<int> sums;
  for (int r = 0; r < modulus; ++r) {
    if (reach[n][r]) sums.push_back(r);
  }
  return sums;
}

int DistinctSumsLowerBound(int p, int n, int a_size) {
  if (!IsPrime(p)) {
    throw DomainError("the distinct-sums bound needs a prime modulus, got " +
                      std::to_string(p));
  }
  if (n < 0 || n > a_size || a_size > p) {
    throw DomainError("distinct-sums bound needs 0 <= n <= |A| <= p");
  }
  return std::min(p, n * a_size - n * n + 1);
}

CriterionReport PrimeSecurityCriterion(DealSize size) {
  const int a = size.a();
  const int b = size.b();
  const int c = size.c();
  CriterionReport report{size, IsPrime(size.d()), a * b - 2 * a - b - c + 1,
                         a * b - 2 * b - a - c + 1, false};
  report.secure_by_theorem =
      report.d_prime && report.ineq_a >= 0 && report.ineq_b >= 0;
  return report;
}

std::string_view JustificationName(Justification justification) {
  switch (justification) {
    case Justification::kPrimeDeck:
      return "prime_deck";
    case Justification::kPaddedPrime:
      return "padded_prime";
    case Justification::kSpecialCase431:
      return "special_case_431";
  }
  return "?";
}

Padding PadToPrimeDeck(int a, int b) {
  if (a < 3 || b < 3) throw DomainError("padding needs a, b >= 3");
  if (IsPrime(a + b + 1)) {
    throw DomainError("a + b + 1 = " + std::to_string(a + b + 1) +
                      " is already prime");
  }
  const int p = static_cast<int>(LeastPrimeGeq(a + b + 2));
  const int c_pad = p - (a + b);
  const CriterionReport report = PrimeSecurityCriterion(DealSize::Make(a, b, c_pad));
  if (!report.secure_by_theorem) {
    throw PaddingError("padded size (" + report.size.ToString() +
                           ") fails the prime-deck criterion",
                       report);
  }
  return Padding{p, c_pad, report};
}

Recommendation RecommendProtocol(int a, int b) {
  if (a < 3 || b < 3) {
    throw DomainError("no secure modsum protocol claimed for a or b < 3");
  }
  const DealSize size = DealSize::Make(a, b, 1);
  if ((a == 4 && b == 3) || (a == 3 && b == 4)) {
    return {size, size.d(), ProtocolKind::DModSum(),
            Justification::kSpecialCase431};
  }
  if (IsPrime(size.d())) {
    return {size, size.d(), ProtocolKind::DModSum(), Justification::kPrimeDeck};
  }
  const Padding padding = PadToPrimeDeck(a, b);
  return {size, padding.p, ProtocolKind::LPModSum(),
          Justification::kPaddedPrime};
}

std::vector<PaddingPrimeRow> PaddingPrimeTable() {
  std::vector<PaddingPrimeRow> rows;
  for (int a = 5; a <= 20; ++a) {
    if (IsPrime(a + 4)) continue;
    rows.push_back({a, static_cast<int>(LeastPrimeGeq(a + 5)), 2 * a + 1});
  }
  return rows;
}

std::string PaddingPrimeTableCsv(const std::vector<PaddingPrimeRow>& rows) {
  std::ostringstream out;
  out << "a,p,two_a_plus_1\n";
  for (const PaddingPrimeRow& row : rows) {
    out << row.a << ',' << row.p << ',' << row.two_a_plus_1 << '\n';
  }
  return out.str();
}

}  // namespace modsum
