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

#include "modsum/primes.h"

#include <numeric>

#include "modsum/errors.h"

namespace modsum {
namespace {

std::optional<PrimeGapWitness> LeastPrimeBelow(std::int64_t n,
                                               RationalBound bound) {
  for (std::int64_t p = n + 1; bound.Admits(p); ++p) {
    if (IsPrime(p)) return PrimeGapWitness{n, p, bound};
  }
  return std::nullopt;
}

}  // namespace

bool IsPrime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::int64_t LeastPrimeGeq(std::int64_t n) {
  if (n < 2) throw UsageError("least prime >= n requires n >= 2");
  while (!IsPrime(n)) ++n;
  return n;
}

std::string RationalBound::ToString() const {
  if (denominator == 1) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

std::optional<PrimeGapWitness> BertrandWitness(std::int64_t n) {
  if (n <= 3) throw DomainError("Bertrand's postulate requires n > 3");
  return LeastPrimeBelow(n, RationalBound{2 * n - 2, 1});
}

std::optional<PrimeGapWitness> NaguraWitness(std::int64_t n) {
  if (n <= 24) throw DomainError("Nagura's theorem requires n > 24");
  const std::int64_t g = std::gcd(6 * n, std::int64_t{5});
  return LeastPrimeBelow(n, RationalBound{6 * n / g, 5 / g});
}

}  // namespace modsum
