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

#include "modsum/verify.h"

#include <array>
#include <functional>
#include <map>
#include <tuple>
#include <utility>

#include "modsum/primes.h"

namespace modsum {
namespace {

// Published least primes p > a+4 for 4 < a <= 20 with a+4 composite.
constexpr std::array<std::pair<int, int>, 11> kReferencePaddingPrimes = {{
    {5, 11}, {6, 11}, {8, 13}, {10, 17}, {11, 17}, {12, 17},
    {14, 19}, {16, 23}, {17, 23}, {18, 23}, {20, 29},
}};

// Every size with 3 <= d <= max_d, ordered by d, then a, then b.
std::vector<DealSize> SizesUpTo(int max_d) {
  std::vector<DealSize> sizes;
  for (int d = 3; d <= max_d; ++d) {
    for (int a = 1; a <= d - 2; ++a) {
      for (int b = 1; a + b <= d - 1; ++b) {
        sizes.push_back(DealSize::Make(a, b, d - a - b));
      }
    }
  }
  return sizes;
}

class OracleCache {
 public:
  explicit OracleCache(int jobs) : jobs_(jobs) {}
  bool Secure(DealSize size, int modulus) {
    auto key = std::make_tuple(size.a(), size.b(), size.c(), modulus);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, OracleIsSecure(size, modulus, jobs_).secure).first;
    }
    return it->second;
  }

 private:
  int jobs_;
  std::map<std::tuple<int, int, int, int>, bool> cache_;
};

Json SizeModulus(DealSize size, int modulus) {
  return Json{{"size", ToJson(size)}, {"modulus", modulus}};
}

// Records one check; on failure stores the counterexample. Returns whether
// the sweep may continue.
bool Expect(SuiteReport& report, bool ok, const std::function<Json()>& detail) {
  ++report.checks;
  if (ok) return true;
  report.passed = false;
  report.counterexample = detail();
  return false;
}

void RunCorC1(const SuiteOptions& o, SuiteReport& r) {
  const int max_d = o.max_d.value_or(13);
  r.bounds = "prime d <= " + std::to_string(max_d);
  for (int d = 3; d <= max_d; ++d) {
    if (!IsPrime(d)) continue;
    for (int a = 1; a <= d - 2; ++a) {
      const DealSize size = DealSize::Make(a, d - 1 - a, 1);
      const SecurityVerdict verdict = OracleIsSecure(size, d, o.jobs);
      const bool expected = size.a() > 2 && size.b() > 2;
      if (!Expect(r, verdict.secure == expected, [&] {
            Json j = SizeModulus(size, d);
            j["oracle"] = ToJson(verdict);
            j["expected_secure"] = expected;
            return j;
          })) {
        return;
      }
    }
  }
}

void RunCorPrime(const SuiteOptions& o, SuiteReport& r) {
  const int max_d = o.max_d.value_or(11);
  r.bounds = "prime d <= " + std::to_string(max_d);
  for (const DealSize& size : SizesUpTo(max_d)) {
    if (!IsPrime(size.d())) continue;
    const CriterionReport criterion = PrimeSecurityCriterion(size);
    const SecurityVerdict verdict = OracleIsSecure(size, size.d(), o.jobs);
    if (!Expect(r, criterion.secure_by_theorem == verdict.secure, [&] {
          return Json{{"criterion", ToJson(criterion)}, {"oracle", ToJson(verdict)}};
        })) {
      return;
    }
  }
}

void RunTeoab(const SuiteOptions& o, SuiteReport& r) {
  const int max_d = o.max_d.value_or(9);
  r.bounds = "d <= " + std::to_string(max_d) + ", n = d";
  for (const DealSize& size : SizesUpTo(max_d)) {
    const TeoabResult condition = TeoabCondition(size, size.d());
    const SecurityVerdict verdict = OracleIsSecure(size, size.d(), o.jobs);
    if (!Expect(r, condition.holds == verdict.secure, [&] {
          Json j = SizeModulus(size, size.d());
          j["condition"] = ToJson(condition);
          j["oracle"] = ToJson(verdict);
          return j;
        })) {
      return;
    }
  }
}

void RunDsh(const SuiteOptions& o, SuiteReport& r) {
  const int max_prime = o.max_prime.value_or(13);
  r.bounds = "prime p <= " + std::to_string(max_prime);
  for (int p = 2; p <= max_prime; ++p) {
    if (!IsPrime(p)) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
      const Hand elements = Hand::FromMask(mask);
      for (int n = 0; n <= elements.size(); ++n) {
        const int distinct = static_cast<int>(DistinctSums(elements, n, p).size());
        const int bound = DistinctSumsLowerBound(p, n, elements.size());
        if (!Expect(r, distinct >= bound, [&] {
              return Json{{"p", p}, {"elements", ToJson(elements)}, {"n", n},
                          {"distinct_sums", distinct}, {"bound", bound}};
            })) {
          return;
        }
      }
    }
  }
}

void RunTightness(const SuiteOptions& o, SuiteReport& r) {
  const int max_prime = o.max_prime.value_or(13);
  r.bounds = "prime d <= " + std::to_string(max_prime);
  for (int d = 3; d <= max_prime; ++d) {
    if (!IsPrime(d)) continue;
    for (int a = 1; a <= d - 2; ++a) {
      for (int b = 1; a + b <= d - 1; ++b) {
        const Hand elements = Hand::Range(1, a + b);
        const int distinct = static_cast<int>(DistinctSums(elements, a, d).size());
        const int expected = std::min(d, a * (a + b - 1) - a * a + 1);
        if (!Expect(r, distinct == expected, [&] {
              return Json{{"d", d}, {"a", a}, {"b", b},
                          {"distinct_sums", distinct}, {"expected", expected}};
            })) {
          return;
        }
      }
    }
  }
}

void RunReduction(const SuiteOptions& o, SuiteReport& r) {
  const int max_d = o.max_d.value_or(10);
  const int max_modulus = max_d + o.extra_moduli;
  r.bounds = "d <= " + std::to_string(max_d) + ", n <= " +
             std::to_string(max_modulus);
  OracleCache oracle(o.jobs);
  for (const DealSize& size : SizesUpTo(max_d)) {
    for (int n = size.d(); n <= max_modulus; ++n) {
      if (!oracle.Secure(size, n)) continue;
      for (int c = 1; c < size.c(); ++c) {
        const DealSize smaller = DealSize::Make(size.a(), size.b(), c);
        if (!Expect(r, oracle.Secure(smaller, n), [&] {
              Json j = SizeModulus(size, n);
              j["insecure_smaller"] = ToJson(smaller);
              return j;
            })) {
          return;
        }
      }
    }
  }
}

void RunSymmetry(const SuiteOptions& o, SuiteReport& r) {
  const int max_d = o.max_d.value_or(8);
  const int max_modulus = max_d + o.extra_moduli;
  r.bounds = "d <= " + std::to_string(max_d) + ", n <= " +
             std::to_string(max_modulus);
  OracleCache oracle(o.jobs);
  for (const DealSize& size : SizesUpTo(max_d)) {
    for (int n = size.d(); n <= max_modulus; ++n) {
      const bool forward = oracle.Secure(size, n);
      const bool mirrored = oracle.Secure(size.Swapped(), n);
      if (!Expect(r, forward == mirrored, [&] {
            Json j = SizeModulus(size, n);
            j["secure"] = forward;
            j["secure_swapped"] = mirrored;
            return j;
          })) {
        return;
      }
    }
  }
}

void RunOrder(const SuiteOptions& o, SuiteReport& r) {
  const int max_d = o.max_d.value_or(8);
  r.bounds = "d <= " + std::to_string(max_d) + ", d <= n <= d + " +
             std::to_string(o.extra_moduli);
  for (const DealSize& size : SizesUpTo(max_d)) {
    for (int n = size.d(); n <= size.d() + o.extra_moduli; ++n) {
      for (const Deal& deal : EnumerateDeals(size)) {
        const Transcript ab = RunProtocol(deal, ProtocolKind::ModSum(n));
        const Transcript ba =
            RunProtocol(deal, ProtocolKind::ModSum(n), SpeakerOrder::kBobFirst);
        auto fail = [&](const char* what) {
          return [&, what] {
            Json j = SizeModulus(size, n);
            j["deal"] = ToJson(deal);
            j["property"] = what;
            return j;
          };
        };
        const int alice = ab.ResidueOf(Agent::kAlice);
        const int bob = ab.ResidueOf(Agent::kBob);
        if (!Expect(r,
                    alice == ba.ResidueOf(Agent::kAlice) &&
                        bob == ba.ResidueOf(Agent::kBob),
                    fail("residues depend on speaker order"))) {
          return;
        }
        if (!Expect(r, PredictBobResidue(size, n, deal.cath(), alice) == bob,
                    fail("Bob's residue not predictable by Cath"))) {
          return;
        }
        const std::vector<Announcement> forward(ab.announcements.begin(),
                                                ab.announcements.end());
        const std::vector<Announcement> backward(ba.announcements.begin(),
                                                 ba.announcements.end());
        for (Agent agent : kAllAgents) {
          const Hand own = deal.HandOf(agent);
          const bool same =
              CompatibleDeals({agent, own, size, forward}) ==
              CompatibleDeals({agent, own, size, backward});
          if (!Expect(r, same, fail("knowledge depends on speaker order"))) {
            return;
          }
        }
        const bool redundant =
            CompatibleDeals({Agent::kCath, deal.cath(), size, {forward[0]}}) ==
            CompatibleDeals({Agent::kCath, deal.cath(), size, forward});
        if (!Expect(r, redundant, fail("Bob's announcement informs Cath"))) {
          return;
        }
      }
    }
  }
}

void RunInformative(const SuiteOptions& o, SuiteReport& r) {
  const int max_d = o.max_d.value_or(9);
  r.bounds = "c = 1, d <= " + std::to_string(max_d) + ", n in {d, lp(d)}";
  for (const DealSize& size : SizesUpTo(max_d)) {
    if (size.c() != 1) continue;
    const int lp = static_cast<int>(LeastPrimeGeq(size.d()));
    for (int n : {size.d(), lp}) {
      const InformativityVerdict verdict = OracleIsInformative(size, n, o.jobs);
      if (!Expect(r, verdict.informative, [&] {
            Json j = SizeModulus(size, n);
            j["oracle"] = ToJson(verdict);
            return j;
          })) {
        return;
      }
    }
  }
}

void RunWitness(const SuiteOptions& o, SuiteReport& r) {
  const int max_d = o.max_d.value_or(8);
  r.bounds = "d <= " + std::to_string(max_d) + ", d <= n <= d + " +
             std::to_string(o.extra_moduli);
  OracleCache oracle(o.jobs);
  for (const DealSize& size : SizesUpTo(max_d)) {
    for (int n = size.d(); n <= size.d() + o.extra_moduli; ++n) {
      const bool secure = oracle.Secure(size, n);
      auto detail = [&](Json k) {
        return [&, k] {
          Json j = SizeModulus(size, n);
          j["k"] = k;
          j["oracle_secure"] = secure;
          return j;
        };
      };
      for (int k = 1; k <= std::min(size.a(), size.b()); ++k) {
        if (WitnessIsSecure(size, n, k) && !Expect(r, secure, detail(k))) return;
      }
      if (WitnessIsSecureAnyK(size, n) && !Expect(r, secure, detail("any"))) {
        return;
      }
      if (!Expect(r, WitnessIsSecurePerCard(size, n) == secure,
                  detail("per_card"))) {
        return;
      }
    }
  }
}

void RunCaseB(const SuiteOptions&, SuiteReport& r) {
  r.bounds = "4 < a <= 20, a + 4 composite";
  const std::vector<PaddingPrimeRow> rows = PaddingPrimeTable();
  if (!Expect(r, rows.size() == kReferencePaddingPrimes.size(), [&] {
        return Json{{"rows", ToJson(rows)}};
      })) {
    return;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto [a, p] = kReferencePaddingPrimes[i];
    const PaddingPrimeRow& row = rows[i];
    if (!Expect(r, row.a == a && row.p == p && row.p <= row.two_a_plus_1, [&] {
          return Json{{"row", ToJson(std::vector<PaddingPrimeRow>{row})},
                      {"reference_a", a},
                      {"reference_p", p}};
        })) {
      return;
    }
  }
}

void RunPadding(const SuiteOptions& o, SuiteReport& r) {
  const int max_n = o.max_n.value_or(10000);
  r.bounds = "22 <= a <= " + std::to_string(max_n) + "; recommender d <= 9";
  for (int a = 22; a <= max_n; ++a) {
    if (IsPrime(a + 4)) continue;
    const std::int64_t p = LeastPrimeGeq(a + 4);
    if (!Expect(r, p <= 2 * a + 1, [&] {
          return Json{{"a", a}, {"p", p}};
        })) {
      return;
    }
  }
  OracleCache oracle(o.jobs);
  for (int a = 3; a <= 5; ++a) {
    for (int b = 3; a + b + 1 <= 9; ++b) {
      const Recommendation rec = RecommendProtocol(a, b);
      if (!Expect(r, oracle.Secure(rec.size, rec.modulus), [&] {
            return Json{{"recommendation", ToJson(rec)}};
          })) {
        return;
      }
    }
  }
}

void RunBertrand(const SuiteOptions& o, SuiteReport& r) {
  const int max_n = o.max_n.value_or(10000);
  r.bounds = "4 <= n <= " + std::to_string(max_n);
  for (int n = 4; n <= max_n; ++n) {
    if (!Expect(r, BertrandWitness(n).has_value(),
                [&] { return Json{{"n", n}}; })) {
      return;
    }
  }
}

void RunNagura(const SuiteOptions& o, SuiteReport& r) {
  const int max_n = o.max_n.value_or(10000);
  r.bounds = "25 <= n <= " + std::to_string(max_n);
  for (int n = 25; n <= max_n; ++n) {
    const std::optional<PrimeGapWitness> witness = NaguraWitness(n);
    const bool ok = witness && witness->p == LeastPrimeGeq(n + 1);
    if (!Expect(r, ok, [&] { return Json{{"n", n}}; })) return;
  }
}

using SuiteFn = void (*)(const SuiteOptions&, SuiteReport&);

const std::vector<std::pair<std::string_view, SuiteFn>>& Registry() {
  static const auto* registry =
      new std::vector<std::pair<std::string_view, SuiteFn>>{
          {"corc1", RunCorC1},         {"corprime", RunCorPrime},
          {"teoab", RunTeoab},         {"dsh", RunDsh},
          {"tightness", RunTightness}, {"reduction", RunReduction},
          {"symmetry", RunSymmetry},   {"order", RunOrder},
          {"informative", RunInformative}, {"witness", RunWitness},
          {"caseb", RunCaseB},         {"padding", RunPadding},
          {"bertrand", RunBertrand},   {"nagura", RunNagura},
      };
  return *registry;
}

}  // namespace

const std::vector<std::string_view>& SuiteNames() {
  static const auto* names = [] {
    auto* out = new std::vector<std::string_view>();
    for (const auto& [name, fn] : Registry()) out->push_back(name);
    return out;
  }();
  return *names;
}

SuiteReport RunSuite(std::string_view name, const SuiteOptions& options) {
  for (const auto& [suite, fn] : Registry()) {
    if (suite != name) continue;
    SuiteReport report;
    report.suite = std::string(name);
    fn(options, report);
    return report;
  }
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

Json ToJson(const SuiteReport& report) {
  return Json{{"suite", report.suite},
              {"passed", report.passed},
              {"checks", report.checks},
              {"bounds", report.bounds},
              {"counterexample", report.counterexample}};
}

}  // namespace modsum
