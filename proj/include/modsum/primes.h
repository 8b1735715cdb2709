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

#ifndef MODSUM_PRIMES_H_
#define MODSUM_PRIMES_H_

#include <cstdint>
#include <optional>
#include <string>

namespace modsum {

// Deterministic trial division.
bool IsPrime(std::int64_t n);

// Smallest prime p >= n. Throws UsageError for n < 2.
std::int64_t LeastPrimeGeq(std::int64_t n);

// An exclusive upper bound numerator/denominator, kept exact.
struct RationalBound {
  std::int64_t numerator;
  std::int64_t denominator;

  // p < numerator / denominator, compared without division.
  bool Admits(std::int64_t p) const { return p * denominator < numerator; }
  std::string ToString() const;
};

// A prime strictly inside (n, upper_bound).
struct PrimeGapWitness {
  std::int64_t n;
  std::int64_t p;
  RationalBound upper_bound;
};

// Least prime p with n < p < 2n - 2. Requires n > 3 (DomainError otherwise);
// nullopt would be a counterexample to Bertrand's postulate.
std::optional<PrimeGapWitness> BertrandWitness(std::int64_t n);

// Least prime p with n < p < 6n/5. Requires n > 24 (DomainError otherwise);
// nullopt would be a counterexample to Nagura's theorem.
std::optional<PrimeGapWitness> NaguraWitness(std::int64_t n);

}  // namespace modsum

#endif  // MODSUM_PRIMES_H_
