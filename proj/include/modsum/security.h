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

#ifndef MODSUM_SECURITY_H_
#define MODSUM_SECURITY_H_

// Brute-force epistemic verification of modular-sum announcements.
//
// An observer considers possible every deal in which she holds her own hand
// and every announcement made so far is true. She knows that a player holds
// a card when that player holds it in all of those deals. An announcement is
//
//   secure       if, for every deal, Cath afterwards knows the owner of no
//                card except her own;
//   informative  if, for every deal, Bob knows the deal after Alice speaks
//                and Alice knows the deal after Bob speaks.
//
// Verdicts come from sweeping every deal of a size in lexicographic order;
// counterexamples are the first failing deal in that order, independent of
// the number of worker threads.
//
// The witness-swap checker is a cheaper sufficient test: if every card of a
// hand can be exchanged, inside a k-tuple, for a k-tuple of the other hand
// with the same sum, then Cath has an indistinguishable deal in which that
// card changes owner.

#include <optional>
#include <vector>

#include "modsum/deck.h"
#include "modsum/protocol.h"

namespace modsum {

struct KnowledgeQuery {
  Agent observer;
  Hand observer_hand;
  DealSize size;
  // Announcements heard so far, in order.
  std::vector<Announcement> announcements;
};

// Deals the observer cannot tell apart from the actual one, lexicographic on
// (A, B). Throws UsageError for a malformed query and VerifierError if no
// deal is compatible (announcements that were not truthful).
std::vector<Deal> CompatibleDeals(const KnowledgeQuery& query);

struct Ownership {
  Card card;
  Agent owner;

  bool operator==(const Ownership&) const = default;
};

// Every (card, owner) pair that holds in all compatible deals, sorted by
// card. Always contains the observer's own cards.
std::vector<Ownership> KnownCards(const KnowledgeQuery& query);

struct Leak {
  Deal deal;
  Card card;
  Agent owner;
};

struct SecurityVerdict {
  bool secure = true;
  std::optional<Leak> counterexample;
};

struct Confusion {
  Deal deal;
  // Another deal the observer cannot rule out.
  Deal alternative;
  Agent observer;
};

struct InformativityVerdict {
  bool informative = true;
  std::optional<Confusion> counterexample;
};

// Checks Cath's knowledge after Alice's announcement of sum(A) mod n, for
// every deal. Bob's announcement is implied for Cath, so it is not replayed.
// A leak reports the smallest card Cath learns. `jobs` < 1 means one worker.
SecurityVerdict OracleIsSecure(DealSize size, int modulus, int jobs = 1);

// Bob must know the deal after Alice's announcement, and Alice after Bob's.
InformativityVerdict OracleIsInformative(DealSize size, int modulus,
                                         int jobs = 1);

// True iff card x of `as` can be exchanged inside a k-tuple: some
// (k-1)-subset of as\{x} has a sum y such that (x + y) mod m is the sum of
// some k-subset of `bs`. Cath then has an indistinguishable deal in which x
// belongs to the other player.
bool CardIsSwappable(int modulus, int k, Card x, Hand as, Hand bs);

// True iff every card of `as` is swappable with the same k. k must be >= 1
// (UsageError otherwise); k > |bs| or k > |as| gives false.
bool WitnessCheck(int modulus, int k, Hand as, Hand bs);

enum class WitnessDirections {
  kBoth,        // A->B and B->A: every card of both hands is covered
  kAliceToBob,  // only Alice's cards, as in a one-sided sweep
};

// WitnessCheck with a fixed k for every deal of the size.
bool WitnessIsSecure(DealSize size, int modulus, int k,
                     WitnessDirections directions = WitnessDirections::kBoth);

// Per-deal variant: each direction may pick its own k in [2, min(a, b)].
bool WitnessIsSecureAnyK(
    DealSize size, int modulus,
    WitnessDirections directions = WitnessDirections::kBoth);

// Per-card variant: every card of both hands may pick its own k in
// [1, min(a, b)]. Every indistinguishable deal arises from such a swap, so
// this agrees with OracleIsSecure.
bool WitnessIsSecurePerCard(DealSize size, int modulus);

struct TeoabFailure {
  int residue;
  // The (a+b-1)-card pool lacking a subset with that residue.
  Hand pool;
  // kAlice: no a-subset reaches the residue; kBob: no b-subset does.
  Agent side;
};

struct TeoabResult {
  bool holds = true;
  std::optional<TeoabFailure> counterexample;
};

// For every residue x in [0, n) and every (a+b-1)-subset S of the deck, S has
// an a-subset and a b-subset summing to x mod n. With n = d this is
// equivalent to security of the sum announcement; for n > d it is only an
// experiment. Scans pools lexicographically, then x ascending, a-side first.
TeoabResult TeoabCondition(DealSize size, int modulus);

}  // namespace modsum

#endif  // MODSUM_SECURITY_H_
