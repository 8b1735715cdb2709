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

#ifndef MODSUM_SRC_DEAL_SWEEP_H_
#define MODSUM_SRC_DEAL_SWEEP_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "modsum/deck.h"

namespace modsum::internal {

// Finds the failure with the smallest enumeration index over all deals of a
// size. Alice's hands are dealt round-robin to `jobs` workers; each worker
// builds its own checker via make_checker() and calls
//   std::optional<T> checker(Hand alice, Hand bob, Hand cath)
// on its deals in order. Result is the same for every value of jobs.
template <typename T, typename MakeChecker>
std::optional<T> FirstFailure(DealSize size, int jobs, MakeChecker make_checker) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  const Hand deck = size.Deck();
  const std::uint64_t per_alice = Binomial(size.b() + size.c(), size.b());
  const std::uint64_t alice_hands = Binomial(size.d(), size.a());
  jobs = static_cast<int>(
      std::clamp<std::uint64_t>(jobs < 1 ? 1 : jobs, 1, alice_hands));

  std::atomic<std::uint64_t> best_index{kNone};
  std::mutex mu;
  std::optional<T> best;
  std::exception_ptr error;

  auto worker = [&](int id) {
    try {
      auto checker = make_checker();
      for (SubsetCursor alice(deck, size.a()); !alice.done(); alice.Next()) {
        if (alice.index() % jobs != static_cast<std::uint64_t>(id)) continue;
        if (alice.index() * per_alice > best_index.load()) return;
        const Hand rest = deck - alice.current();
        for (SubsetCursor bob(rest, size.b()); !bob.done(); bob.Next()) {
          std::optional<T> failure =
              checker(alice.current(), bob.current(), rest - bob.current());
          if (!failure) continue;
          const std::uint64_t index = alice.index() * per_alice + bob.index();
          std::lock_guard<std::mutex> lock(mu);
          if (index < best_index.load()) {
            best_index.store(index);
            best = std::move(failure);
          }
          return;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (std::thread& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  return best;
}

}  // namespace modsum::internal

#endif  // MODSUM_SRC_DEAL_SWEEP_H_
