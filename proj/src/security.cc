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

#include "modsum/security.h"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>

#include "deal_sweep.h"
#include "modsum/errors.h"

namespace modsum {
namespace {

using Hands = std::array<Hand, 3>;

void ValidateQuery(const KnowledgeQuery& query) {
  const int expected = query.size.HandSize(query.observer);
  if (query.observer_hand.size() != expected ||
      !query.observer_hand.IsSubsetOf(query.size.Deck())) {
    throw UsageError(std::string(AgentName(query.observer)) + " must hold " +
                     std::to_string(expected) + " cards of the deck 0.." +
                     std::to_string(query.size.d() - 1));
  }
  for (const Announcement& a : query.announcements) {
    if (a.modulus < 1) throw UsageError("announcement modulus must be >= 1");
  }
}

bool Consistent(const Hands& hands, const std::vector<Announcement>& heard) {
  for (const Announcement& a : heard) {
    if (SumMod(hands[static_cast<int>(a.speaker)], a.modulus) != a.residue) {
      return false;
    }
  }
  return true;
}

// Calls fn(hands) for every compatible deal, lexicographic on (A, B).
template <typename Fn>
void ForEachCompatible(const KnowledgeQuery& query, Fn&& fn) {
  ValidateQuery(query);
  const DealSize& size = query.size;
  const Hand own = query.observer_hand;
  const Hand rest = size.Deck() - own;
  // The observer's hand is fixed; enumerate one of the other two hands and
  // give the remaining cards to the third player.
  const Agent enumerated =
      query.observer == Agent::kAlice ? Agent::kBob : Agent::kAlice;
  for (SubsetCursor cursor(rest, size.HandSize(enumerated)); !cursor.done();
       cursor.Next()) {
    Hands hands;
    hands[static_cast<int>(query.observer)] = own;
    hands[static_cast<int>(enumerated)] = cursor.current();
    for (Agent agent : kAllAgents) {
      if (agent != query.observer && agent != enumerated) {
        hands[static_cast<int>(agent)] = rest - cursor.current();
      }
    }
    if (Consistent(hands, query.announcements)) fn(hands);
  }
}

Deal ToDeal(DealSize size, const Hands& hands) {
  return Deal::Make(size, hands[0], hands[1], hands[2]);
}

void RequireModulusCoversDeck(DealSize size, int modulus) {
  if (modulus < size.d()) {
    throw DomainError("modulus " + std::to_string(modulus) +
                      " is smaller than the deck size " +
                      std::to_string(size.d()));
  }
}

// Residues reachable as sums of k-subsets of pool, as a membership table.
std::vector<char> SubsetSumResidues(Hand pool, int k, int modulus) {
  std::vector<char> reachable(modulus, 0);
  for (SubsetCursor cursor(pool, k); !cursor.done(); cursor.Next()) {
    reachable[SumMod(cursor.current(), modulus)] = 1;
  }
  return reachable;
}

// Whether x plus k-1 other cards of `from` reaches a residue in `targets`.
bool Swappable(const std::vector<char>& targets, int modulus, int k, Card x,
               Hand from) {
  const Hand others = from - Hand::FromMask(std::uint64_t{1} << x);
  for (SubsetCursor partners(others, k - 1); !partners.done(); partners.Next()) {
    if (targets[(x + SumMod(partners.current(), modulus)) % modulus]) return true;
  }
  return false;
}

bool CoversAll(const std::vector<char>& reachable) {
  for (char r : reachable) {
    if (!r) return false;
  }
  return true;
}

}  // namespace

std::vector<Deal> CompatibleDeals(const KnowledgeQuery& query) {
  std::vector<Deal> deals;
  ForEachCompatible(query, [&](const Hands& hands) {
    deals.push_back(ToDeal(query.size, hands));
  });
  if (deals.empty()) {
    throw VerifierError("no deal is compatible with " +
                        std::string(AgentName(query.observer)) + "'s view");
  }
  return deals;
}

std::vector<Ownership> KnownCards(const KnowledgeQuery& query) {
  std::array<std::uint64_t, 3> always = {~std::uint64_t{0}, ~std::uint64_t{0},
                                         ~std::uint64_t{0}};
  bool any = false;
  ForEachCompatible(query, [&](const Hands& hands) {
    any = true;
    for (int i = 0; i < 3; ++i) always[i] &= hands[i].mask();
  });
  if (!any) {
    throw VerifierError("no deal is compatible with " +
                        std::string(AgentName(query.observer)) + "'s view");
  }
  std::vector<Ownership> known;
  for (Card card = 0; card < query.size.d(); ++card) {
    for (Agent agent : kAllAgents) {
      if ((always[static_cast<int>(agent)] >> card) & 1u) {
        known.push_back({card, agent});
      }
    }
  }
  return known;
}

SecurityVerdict OracleIsSecure(DealSize size, int modulus, int jobs) {
  RequireModulusCoversDeck(size, modulus);
  auto make_checker = [size, modulus]() {
    // Cath's knowledge depends only on her hand and Alice's residue.
    using Key = std::pair<std::uint64_t, int>;
    return [size, modulus, memo = std::map<Key, std::optional<Ownership>>()](
               Hand alice, Hand bob, Hand cath) mutable -> std::optional<Leak> {
      const int residue = SumMod(alice, modulus);
      const Key key{cath.mask(), residue};
      auto it = memo.find(key);
      if (it == memo.end()) {
        std::optional<Ownership> leak;
        KnowledgeQuery query{Agent::kCath, cath, size,
                             {{Agent::kAlice, modulus, residue}}};
        for (const Ownership& known : KnownCards(query)) {
          if (known.owner != Agent::kCath) {
            leak = known;
            break;
          }
        }
        it = memo.emplace(key, leak).first;
      }
      if (!it->second) return std::nullopt;
      return Leak{Deal::Make(size, alice, bob, cath), it->second->card,
                  it->second->owner};
    };
  };
  std::optional<Leak> leak =
      internal::FirstFailure<Leak>(size, jobs, make_checker);
  return SecurityVerdict{!leak.has_value(), std::move(leak)};
}

InformativityVerdict OracleIsInformative(DealSize size, int modulus, int jobs) {
  RequireModulusCoversDeck(size, modulus);
  auto make_checker = [size, modulus]() {
    return [size, modulus](Hand alice, Hand bob,
                           Hand cath) -> std::optional<Confusion> {
      const Deal deal = Deal::Make(size, alice, bob, cath);
      const Announcement said_by_alice{Agent::kAlice, modulus,
                                       SumMod(alice, modulus)};
      const Announcement said_by_bob{Agent::kBob, modulus, SumMod(bob, modulus)};
      const std::array<KnowledgeQuery, 2> views = {
          KnowledgeQuery{Agent::kBob, bob, size, {said_by_alice}},
          KnowledgeQuery{Agent::kAlice, alice, size,
                         {said_by_alice, said_by_bob}}};
      for (const KnowledgeQuery& view : views) {
        std::vector<Deal> possible = CompatibleDeals(view);
        if (possible.size() == 1) continue;
        for (const Deal& other : possible) {
          if (!(other == deal)) return Confusion{deal, other, view.observer};
        }
      }
      return std::nullopt;
    };
  };
  std::optional<Confusion> confusion =
      internal::FirstFailure<Confusion>(size, jobs, make_checker);
  return InformativityVerdict{!confusion.has_value(), std::move(confusion)};
}

bool CardIsSwappable(int modulus, int k, Card x, Hand as, Hand bs) {
  if (modulus < 1) throw UsageError("modulus must be >= 1");
  if (k < 1) throw UsageError("tuple size k must be >= 1");
  if (!as.Contains(x)) throw UsageError("card is not in the hand");
  if (k > bs.size() || k > as.size()) return false;
  const std::vector<char> targets = SubsetSumResidues(bs, k, modulus);
  return Swappable(targets, modulus, k, x, as);
}

bool WitnessCheck(int modulus, int k, Hand as, Hand bs) {
  if (modulus < 1) throw UsageError("modulus must be >= 1");
  if (k < 1) throw UsageError("tuple size k must be >= 1");
  if (k > bs.size() || k > as.size()) return false;
  const std::vector<char> targets = SubsetSumResidues(bs, k, modulus);
  for (Card x : as.Cards()) {
    if (!Swappable(targets, modulus, k, x, as)) return false;
  }
  return true;
}

bool WitnessIsSecure(DealSize size, int modulus, int k,
                     WitnessDirections directions) {
  RequireModulusCoversDeck(size, modulus);
  if (k < 1 || k > std::min(size.a(), size.b())) {
    throw UsageError("tuple size k must lie in [1, min(a, b)]");
  }
  const bool both = directions == WitnessDirections::kBoth;
  for (DealCursor deals(size); !deals.done(); deals.Next()) {
    const Deal deal = deals.current();
    if (!WitnessCheck(modulus, k, deal.alice(), deal.bob()) ||
        (both && !WitnessCheck(modulus, k, deal.bob(), deal.alice()))) {
      return false;
    }
  }
  return true;
}

bool WitnessIsSecureAnyK(DealSize size, int modulus,
                         WitnessDirections directions) {
  RequireModulusCoversDeck(size, modulus);
  const int max_k = std::min(size.a(), size.b());
  auto some_k = [&](Hand from, Hand to) {
    for (int k = 2; k <= max_k; ++k) {
      if (WitnessCheck(modulus, k, from, to)) return true;
    }
    return false;
  };
  const bool both = directions == WitnessDirections::kBoth;
  for (DealCursor deals(size); !deals.done(); deals.Next()) {
    const Deal deal = deals.current();
    if (!some_k(deal.alice(), deal.bob()) ||
        (both && !some_k(deal.bob(), deal.alice()))) {
      return false;
    }
  }
  return true;
}

bool WitnessIsSecurePerCard(DealSize size, int modulus) {
  RequireModulusCoversDeck(size, modulus);
  const int max_k = std::min(size.a(), size.b());
  auto all_cards_move = [&](Hand from, Hand to) {
    std::vector<std::vector<char>> targets;
    for (int k = 1; k <= max_k; ++k) {
      targets.push_back(SubsetSumResidues(to, k, modulus));
    }
    for (Card x : from.Cards()) {
      bool moved = false;
      for (int k = 1; k <= max_k && !moved; ++k) {
        moved = Swappable(targets[k - 1], modulus, k, x, from);
      }
      if (!moved) return false;
    }
    return true;
  };
  for (DealCursor deals(size); !deals.done(); deals.Next()) {
    const Deal deal = deals.current();
    if (!all_cards_move(deal.alice(), deal.bob()) ||
        !all_cards_move(deal.bob(), deal.alice())) {
      return false;
    }
  }
  return true;
}

TeoabResult TeoabCondition(DealSize size, int modulus) {
  RequireModulusCoversDeck(size, modulus);
  const int pool_size = size.a() + size.b() - 1;
  for (SubsetCursor pools(size.Deck(), pool_size); !pools.done(); pools.Next()) {
    const Hand pool = pools.current();
    const std::vector<char> by_alice = SubsetSumResidues(pool, size.a(), modulus);
    const std::vector<char> by_bob = SubsetSumResidues(pool, size.b(), modulus);
    if (CoversAll(by_alice) && CoversAll(by_bob)) continue;
    for (int x = 0; x < modulus; ++x) {
      if (!by_alice[x]) return {false, TeoabFailure{x, pool, Agent::kAlice}};
      if (!by_bob[x]) return {false, TeoabFailure{x, pool, Agent::kBob}};
    }
  }
  return {};
}

}  // namespace modsum
