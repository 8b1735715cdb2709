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

#ifndef MODSUM_VERIFY_H_
#define MODSUM_VERIFY_H_

// Finite sweeps that check the analytic results against the brute-force
// verifier. Each suite stops at its first violation and reports it.
//
//   suite       default bound   checks
//   corc1       max_d = 13      (a,b,1), d prime: secure iff a, b > 2
//   corprime    max_d = 11      d prime: inequality criterion == oracle
//   teoab       max_d = 9       subset-sum condition == oracle at n = d
//   dsh         max_prime = 13  |S^n(A)| >= min(p, n|A| - n^2 + 1)
//   tightness   max_prime = 13  equality on A = {1, ..., a+b-1}
//   reduction   max_d = 10      secure at (a,b,c) => secure at (a,b,c'<c)
//   symmetry    max_d = 8       secure at (a,b,c) == secure at (b,a,c)
//   order       max_d = 8       speaker order, Bob-residue prediction and
//                               redundancy of Bob's announcement for Cath
//   informative max_d = 9       (a,b,1) informative for n in {d, lp(d)}
//   witness     max_d = 8       witness-swap checker => oracle secure;
//                               per-card swaps == oracle
//   caseb       -               padding-prime table matches reference
//   padding     max_n = 10000   prime padding bound and recommender
//   bertrand    max_n = 10000   prime in (n, 2n-2) for 4 <= n <= max_n
//   nagura      max_n = 10000   prime in (n, 6n/5) for 25 <= n <= max_n
//
// Sweeps over moduli use n in [d, max_d + extra_moduli].

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modsum/serialize.h"

namespace modsum {

struct SuiteOptions {
  std::optional<int> max_d;
  std::optional<int> max_prime;
  std::optional<int> max_n;
  int extra_moduli = 3;
  int jobs = 1;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::uint64_t checks = 0;
  // Human-readable bounds actually used, e.g. "d <= 9".
  std::string bounds;
  // First violation; null when passed.
  Json counterexample;
};

const std::vector<std::string_view>& SuiteNames();

// Throws UsageError for an unknown suite name.
SuiteReport RunSuite(std::string_view name, const SuiteOptions& options);

Json ToJson(const SuiteReport& report);

}  // namespace modsum

#endif  // MODSUM_VERIFY_H_
