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

#ifndef MODSUM_DECK_H_
#define MODSUM_DECK_H_

// Cards, hands and deals for three players sharing a deck {0, ..., d-1},
// together with lazy lexicographic enumeration of subsets and deals.

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modsum {

using Card = int;

// Hands are 64-bit masks, so decks are capped at 64 cards.
inline constexpr int kMaxDeckSize = 64;

enum class Agent { kAlice = 0, kBob = 1, kCath = 2 };

inline constexpr std::array<Agent, 3> kAllAgents = {Agent::kAlice, Agent::kBob,
                                                    Agent::kCath};

std::string_view AgentName(Agent agent);

// A set of cards, stored as a bitmask. Immutable value type.
class Hand {
 public:
  constexpr Hand() = default;

  static constexpr Hand FromMask(std::uint64_t mask) { return Hand(mask); }
  // Throws UsageError on duplicates or cards outside [0, 64).
  static Hand FromCards(std::span<const Card> cards);
  // The cards lo, lo+1, ..., hi-1.
  static Hand Range(Card lo, Card hi);
  // Parses "0,1,2" (whitespace tolerated, empty string is the empty hand).
  static Hand Parse(std::string_view text);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool Contains(Card card) const {
    return card >= 0 && card < kMaxDeckSize && ((mask_ >> card) & 1u) != 0;
  }
  constexpr bool Disjoint(Hand other) const {
    return (mask_ & other.mask_) == 0;
  }
  constexpr bool IsSubsetOf(Hand other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  std::vector<Card> Cards() const;
  // Sum of the cards as plain integers.
  std::int64_t Sum() const;
  // "0,1,2"
  std::string ToString() const;

  constexpr Hand operator|(Hand o) const { return Hand(mask_ | o.mask_); }
  constexpr Hand operator&(Hand o) const { return Hand(mask_ & o.mask_); }
  constexpr Hand operator-(Hand o) const { return Hand(mask_ & ~o.mask_); }
  constexpr bool operator==(const Hand&) const = default;

 private:
  constexpr explicit Hand(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

// Lexicographic comparison of the sorted card lists.
bool LexLess(Hand lhs, Hand rhs);

// Card deal size (a, b, c); all three positive and d = a+b+c <= 64.
class DealSize {
 public:
  // Throws UsageError when a size is < 1 or the deck exceeds kMaxDeckSize.
  static DealSize Make(int a, int b, int c);

  constexpr int a() const { return a_; }
  constexpr int b() const { return b_; }
  constexpr int c() const { return c_; }
  constexpr int d() const { return a_ + b_ + c_; }
  int HandSize(Agent agent) const;
  Hand Deck() const { return Hand::Range(0, d()); }
  // Same size with Alice and Bob exchanged.
  DealSize Swapped() const { return DealSize(b_, a_, c_); }
  // "4,3,1"
  std::string ToString() const;

  constexpr bool operator==(const DealSize&) const = default;

 private:
  constexpr DealSize(int a, int b, int c) : a_(a), b_(b), c_(c) {}
  int a_;
  int b_;
  int c_;
};

// A partition (A, B, C) of the deck. Construct through Make() or FromHands().
class Deal {
 public:
  // Validates that the hands partition {0..d-1} with the sizes in `size`.
  static Deal Make(DealSize size, Hand alice, Hand bob, Hand cath);
  // Infers the size from the hands; d is the total number of cards.
  static Deal FromHands(Hand alice, Hand bob, Hand cath);

  DealSize size() const { return size_; }
  Hand alice() const { return hands_[0]; }
  Hand bob() const { return hands_[1]; }
  Hand cath() const { return hands_[2]; }
  Hand HandOf(Agent agent) const {
    return hands_[static_cast<int>(agent)];
  }
  // Owner of a card in the deck.
  Agent OwnerOf(Card card) const;
  // The same deal with Alice's and Bob's hands exchanged.
  Deal Swapped() const;

  // "0,1,2,3|4,5,6|7"
  std::string ToString() const;

  bool operator==(const Deal& o) const { return hands_ == o.hands_; }

 private:
  Deal(DealSize size, Hand alice, Hand bob, Hand cath)
      : size_(size), hands_{alice, bob, cath} {}
  DealSize size_;
  std::array<Hand, 3> hands_;
};

// Exact binomial coefficient for the small arguments used here.
std::uint64_t Binomial(int n, int k);

// Number of deals of a size: C(d, a) * C(d - a, b).
std::uint64_t CountDeals(DealSize size);

// Residue of the sum of the cards modulo n. Throws UsageError for n < 1.
int SumMod(Hand hand, int n);

// Streams the k-subsets of a pool in lexicographic order of their sorted
// card lists. k > |pool| yields nothing; k == 0 yields the empty hand once.
class SubsetCursor {
 public:
  SubsetCursor(Hand pool, int k);

  bool done() const { return done_; }
  Hand current() const { return current_; }
  // Zero-based position of current() in the stream.
  std::uint64_t index() const { return index_; }
  void Next();

 private:
  void Rebuild();

  std::vector<Card> pool_;
  std::vector<int> positions_;
  Hand current_;
  std::uint64_t index_ = 0;
  bool done_ = false;
};

// All k-subsets of a pool, in SubsetCursor order.
std::vector<Hand> SubsetsOfSize(Hand pool, int k);

// Streams every deal of a size, lexicographic on (A, B).
class DealCursor {
 public:
  explicit DealCursor(DealSize size);

  bool done() const { return alice_.done(); }
  Deal current() const;
  std::uint64_t index() const { return index_; }
  void Next();

 private:
  DealSize size_;
  SubsetCursor alice_;
  SubsetCursor bob_;
  std::uint64_t index_ = 0;
};

// Range adaptor so deals can be consumed with a range-for loop:
//   for (const Deal& deal : EnumerateDeals(size)) { ... }
class DealRange {
 public:
  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Deal;
    using difference_type = std::ptrdiff_t;
    using pointer = const Deal*;
    using reference = Deal;

    Iterator() = default;
    explicit Iterator(DealCursor* cursor) : cursor_(cursor) {}
    Deal operator*() const { return cursor_->current(); }
    Iterator& operator++() {
      cursor_->Next();
      return *this;
    }
    void operator++(int) { cursor_->Next(); }
    bool operator==(std::default_sentinel_t) const { return cursor_->done(); }

   private:
    DealCursor* cursor_ = nullptr;
  };

  explicit DealRange(DealSize size) : cursor_(size) {}
  Iterator begin() { return Iterator(&cursor_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  DealCursor cursor_;
};

inline DealRange EnumerateDeals(DealSize size) { return DealRange(size); }

}  // namespace modsum

#endif  // MODSUM_DECK_H_
