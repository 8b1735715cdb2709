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

#ifndef MODSUM_TESTS_ORACLES_H_
#define MODSUM_TESTS_ORACLES_H_

// Slow reference implementations for tests. Plain vectors and recursion, no
// bitmasks, nothing shared with the library.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace modsum::oracle {

using Cards = std::vector<int>;

inline std::vector<Cards> Subsets(int n, const Cards& xs) {
  if (n == 0) return {Cards{}};
  if (static_cast<int>(xs.size()) < n) return {};
  const Cards tail(xs.begin() + 1, xs.end());
  std::vector<Cards> out;
  for (Cards s : Subsets(n - 1, tail)) {
    s.insert(s.begin(), xs[0]);
    out.push_back(s);
  }
  for (const Cards& s : Subsets(n, tail)) out.push_back(s);
  return out;
}

inline int Sum(const Cards& xs) {
  int s = 0;
  for (int x : xs) s += x;
  return s;
}

inline std::set<int> SubsetSum(int m, int n, const Cards& xs) {
  std::set<int> out;
  for (const Cards& s : Subsets(n, xs)) out.insert(Sum(s) % m);
  return out;
}

inline Cards Without(const Cards& xs, const Cards& drop) {
  Cards out;
  for (int x : xs) {
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  }
  return out;
}

inline Cards Range(int n) {
  Cards out;
  for (int i = 0; i < n; ++i) out.push_back(i);
  return out;
}

struct Deal {
  Cards a, b, c;
};

inline std::vector<Deal> Deals(int a, int b, int c) {
  const Cards deck = Range(a + b + c);
  std::vector<Deal> out;
  for (const Cards& xs : Subsets(a, deck)) {
    const Cards rest = Without(deck, xs);
    for (const Cards& ys : Subsets(b, rest)) {
      out.push_back({xs, ys, Without(rest, ys)});
    }
  }
  return out;
}

// Every x in as has a (k-1)-subset of the rest of as with sum y such that
// x + y lands in the k-subset sums of bs.
inline bool Check(int m, int k, const Cards& as, const Cards& bs) {
  if (k > static_cast<int>(as.size()) || k > static_cast<int>(bs.size())) {
    return false;
  }
  const std::set<int> ys = SubsetSum(m, k, bs);
  for (int x : as) {
    bool ok = false;
    for (int y : SubsetSum(m, k - 1, Without(as, {x}))) {
      if (ys.count((x + y) % m)) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

struct LeakResult {
  bool secure = true;
  Deal deal;
  int card = -1;
  // 0 = alice, 1 = bob.
  int owner = -1;
};

// Cath's knowledge after Alice announces sum(A) mod n, from the definition.
inline LeakResult Secure(int a, int b, int c, int n) {
  const std::vector<Deal> all = Deals(a, b, c);
  const int d = a + b + c;
  for (const Deal& deal : all) {
    const int r = Sum(deal.a) % n;
    std::vector<bool> alice_always(d, true), bob_always(d, true);
    for (const Deal& other : all) {
      if (other.c != deal.c || Sum(other.a) % n != r) continue;
      for (int x = 0; x < d; ++x) {
        const bool in_a =
            std::find(other.a.begin(), other.a.end(), x) != other.a.end();
        const bool in_b =
            std::find(other.b.begin(), other.b.end(), x) != other.b.end();
        if (!in_a) alice_always[x] = false;
        if (!in_b) bob_always[x] = false;
      }
    }
    for (int x = 0; x < d; ++x) {
      if (alice_always[x]) return {false, deal, x, 0};
      if (bob_always[x]) return {false, deal, x, 1};
    }
  }
  return {};
}

// Bob knows the deal after Alice, Alice after Bob.
inline bool Informative(int a, int b, int c, int n) {
  const std::vector<Deal> all = Deals(a, b, c);
  for (const Deal& deal : all) {
    const int ra = Sum(deal.a) % n;
    const int rb = Sum(deal.b) % n;
    int bob_view = 0, alice_view = 0;
    for (const Deal& other : all) {
      if (other.b == deal.b && Sum(other.a) % n == ra) ++bob_view;
      if (other.a == deal.a && Sum(other.b) % n == rb) ++alice_view;
    }
    if (bob_view != 1 || alice_view != 1) return false;
  }
  return true;
}

inline std::set<int> DistinctSums(const Cards& xs, int n, int p) {
  return SubsetSum(p, n, xs);
}

inline bool IsPrime(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q < n; ++q) {
    if (q * q > n) break;
    if (n % q == 0) return false;
  }
  return true;
}

inline long long NextPrime(long long n) {
  long long p = n;
  while (!IsPrime(p)) ++p;
  return p;
}

}  // namespace modsum::oracle

#endif  // MODSUM_TESTS_ORACLES_H_
