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

#include "modsum/deck.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "modsum/errors.h"

namespace modsum {

std::string_view AgentName(Agent agent) {
  switch (agent) {
    case Agent::kAlice:
      return "alice";
    case Agent::kBob:
      return "bob";
    case Agent::kCath:
      return "cath";
  }
  return "?";
}

// Hand ------------------------------------------------------------------------

Hand Hand::FromCards(std::span<const Card> cards) {
  std::uint64_t mask = 0;
  for (Card card : cards) {
    if (card < 0 || card >= kMaxDeckSize) {
      throw UsageError("card " + std::to_string(card) + " outside [0, " +
                       std::to_string(kMaxDeckSize) + ")");
    }
    std::uint64_t bit = std::uint64_t{1} << card;
    if (mask & bit) {
      throw UsageError("duplicate card " + std::to_string(card));
    }
    mask |= bit;
  }
  return Hand(mask);
}

Hand Hand::Range(Card lo, Card hi) {
  if (lo < 0 || hi > kMaxDeckSize) {
    throw UsageError("card range outside [0, 64)");
  }
  std::uint64_t mask = 0;
  for (Card card = lo; card < hi; ++card) mask |= std::uint64_t{1} << card;
  return Hand(mask);
}

Hand Hand::Parse(std::string_view text) {
  std::vector<Card> cards;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    if (token.empty()) {
      // Only the completely empty string denotes the empty hand.
      if (text.find_first_not_of(" \t") != std::string_view::npos) {
        throw UsageError("malformed hand '" + std::string(text) + "'");
      }
      break;
    }
    Card card = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), card);
    if (ec != std::errc() || end != token.data() + token.size()) {
      throw UsageError("malformed card '" + std::string(token) + "'");
    }
    cards.push_back(card);
    pos = comma + 1;
  }
  return FromCards(cards);
}

std::vector<Card> Hand::Cards() const {
  std::vector<Card> cards;
  cards.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    cards.push_back(std::countr_zero(m));
  }
  return cards;
}

std::int64_t Hand::Sum() const {
  std::int64_t sum = 0;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) sum += std::countr_zero(m);
  return sum;
}

std::string Hand::ToString() const {
  std::string out;
  for (Card card : Cards()) {
    if (!out.empty()) out += ',';
    out += std::to_string(card);
  }
  return out;
}

bool LexLess(Hand lhs, Hand rhs) {
  std::vector<Card> l = lhs.Cards();
  std::vector<Card> r = rhs.Cards();
  return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end());
}

// DealSize --------------------------------------------------------------------

DealSize DealSize::Make(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) {
    throw UsageError("deal size (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) +
                     ") must have a, b, c >= 1");
  }
  if (a + b + c > kMaxDeckSize) {
    throw UsageError("deck of " + std::to_string(a + b + c) +
                     " cards exceeds the 64-card limit");
  }
  return DealSize(a, b, c);
}

int DealSize::HandSize(Agent agent) const {
  switch (agent) {
    case Agent::kAlice:
      return a_;
    case Agent::kBob:
      return b_;
    case Agent::kCath:
      return c_;
  }
  return 0;
}

std::string DealSize::ToString() const {
  return std::to_string(a_) + "," + std::to_string(b_) + "," +
         std::to_string(c_);
}

// Deal ------------------------------------------------------------------------

Deal Deal::Make(DealSize size, Hand alice, Hand bob, Hand cath) {
  if (alice.size() != size.a() || bob.size() != size.b() ||
      cath.size() != size.c()) {
    throw UsageError("hand sizes do not match deal size " + size.ToString());
  }
  if (!alice.Disjoint(bob) || !alice.Disjoint(cath) || !bob.Disjoint(cath)) {
    throw UsageError("hands are not pairwise disjoint");
  }
  if ((alice | bob | cath) != size.Deck()) {
    throw UsageError("hands do not cover the deck 0.." +
                     std::to_string(size.d() - 1));
  }
  return Deal(size, alice, bob, cath);
}

Deal Deal::FromHands(Hand alice, Hand bob, Hand cath) {
  return Make(DealSize::Make(alice.size(), bob.size(), cath.size()), alice, bob,
              cath);
}

Agent Deal::OwnerOf(Card card) const {
  for (Agent agent : kAllAgents) {
    if (HandOf(agent).Contains(card)) return agent;
  }
  throw UsageError("card " + std::to_string(card) + " is not in the deck");
}

Deal Deal::Swapped() const { return Deal(size_.Swapped(), bob(), alice(), cath()); }

std::string Deal::ToString() const {
  return alice().ToString() + "|" + bob().ToString() + "|" + cath().ToString();
}

// Counting and sums -----------------------------------------------------------

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t CountDeals(DealSize size) {
  return Binomial(size.d(), size.a()) * Binomial(size.d() - size.a(), size.b());
}

int SumMod(Hand hand, int n) {
  if (n < 1) throw UsageError("modulus must be >= 1");
  return static_cast<int>(hand.Sum() % n);
}

// SubsetCursor ----------------------------------------------------------------

SubsetCursor::SubsetCursor(Hand pool, int k) : pool_(pool.Cards()) {
  if (k < 0 || k > static_cast<int>(pool_.size())) {
    done_ = true;
    return;
  }
  positions_.resize(k);
  for (int i = 0; i < k; ++i) positions_[i] = i;
  Rebuild();
}

void SubsetCursor::Rebuild() {
  std::uint64_t mask = 0;
  for (int p : positions_) mask |= std::uint64_t{1} << pool_[p];
  current_ = Hand::FromMask(mask);
}

void SubsetCursor::Next() {
  if (done_) return;
  const int k = static_cast<int>(positions_.size());
  const int m = static_cast<int>(pool_.size());
  int i = k - 1;
  while (i >= 0 && positions_[i] == m - k + i) --i;
  if (i < 0) {
    done_ = true;
    return;
  }
  ++positions_[i];
  for (int j = i + 1; j < k; ++j) positions_[j] = positions_[j - 1] + 1;
  ++index_;
  Rebuild();
}

std::vector<Hand> SubsetsOfSize(Hand pool, int k) {
  std::vector<Hand> out;
  out.reserve(Binomial(pool.size(), k));
  for (SubsetCursor cursor(pool, k); !cursor.done(); cursor.Next()) {
    out.push_back(cursor.current());
  }
  return out;
}

// DealCursor ------------------------------------------------------------------

DealCursor::DealCursor(DealSize size)
    : size_(size),
      alice_(size.Deck(), size.a()),
      bob_(size.Deck() - alice_.current(), size.b()) {}

Deal DealCursor::current() const {
  Hand alice = alice_.current();
  Hand bob = bob_.current();
  return Deal::Make(size_, alice, bob, size_.Deck() - alice - bob);
}

void DealCursor::Next() {
  if (done()) return;
  ++index_;
  bob_.Next();
  if (!bob_.done()) return;
  alice_.Next();
  if (alice_.done()) return;
  bob_ = SubsetCursor(size_.Deck() - alice_.current(), size_.b());
}

}  // namespace modsum
