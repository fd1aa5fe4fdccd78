// Copyright 2026 The simplegame Authors
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

#ifndef SIMPLEGAME_GAME_HPP_
#define SIMPLEGAME_GAME_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplegame {

// Largest supported player count. Exhaustive enumeration of all 2^n
// coalitions is the ground truth for every algorithm in the library.
inline constexpr int kMaxPlayers = 24;

using Mask = std::uint32_t;

// Invalid arguments and violated game invariants.
class GameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well formed but exceeds a documented size limit.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A subset of the players {1, ..., n}. Player j is present iff bit j of
// members() is set; bit 0 is never used.
//
// Most algorithms work on the compact "index" encoding instead, where player
// j maps to bit j-1, so that the 2^n coalitions are exactly 0 .. 2^n - 1.
class Coalition {
 public:
  Coalition(int n, Mask members);

  static Coalition of(int n, std::initializer_list<int> players);
  static Coalition from_index(int n, Mask index);
  static Coalition empty(int n) { return Coalition(n, 0); }
  static Coalition grand(int n);

  int players() const { return n_; }
  Mask members() const { return members_; }
  Mask index() const { return members_ >> 1; }

  bool contains(int player) const;
  int size() const;
  bool is_empty() const { return members_ == 0; }
  bool subset_of(const Coalition& other) const;
  Coalition complement() const;
  std::vector<int> player_list() const;

  // Orders by player count, then by index read as a binary number.
  friend auto operator<=>(const Coalition& a, const Coalition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.members_ <=> b.members_;
  }
  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  int n_;
  Mask members_;
};

// Index mask with the lowest n bits set.
inline Mask full_index(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Throws GameError / SizeLimitError unless 1 <= n <= kMaxPlayers.
void check_player_count(int n);

// [q; w_1, ..., w_n] with integer entries, q >= 1 and w(N) >= q.
class WeightedGame {
 public:
  WeightedGame(std::int64_t quota, std::vector<std::int64_t> weights);

  std::int64_t quota() const { return quota_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  int players() const { return static_cast<int>(weights_.size()); }
  std::int64_t total_weight() const { return total_; }

  std::int64_t weight_of(const Coalition& s) const;
  std::int64_t weight_of_index(Mask index) const;
  bool wins(const Coalition& s) const { return weight_of(s) >= quota_; }
  bool wins_index(Mask index) const { return weight_of_index(index) >= quota_; }

  friend bool operator==(const WeightedGame&, const WeightedGame&) = default;

 private:
  std::int64_t quota_;
  std::vector<std::int64_t> weights_;
  std::int64_t total_;
};

WeightedGame make_weighted(std::int64_t quota, std::vector<std::int64_t> weights);

// Winning flags for all 2^n coalitions, addressed by index encoding.
class TruthTable {
 public:
  TruthTable(int n, std::vector<std::uint8_t> winning);

  int players() const { return n_; }
  std::size_t size() const { return winning_.size(); }
  bool operator[](Mask index) const { return winning_[index] != 0; }
  std::size_t count_winning() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> winning_;
};

enum class Form { kExplicit, kWeighted, kIntersection, kUnion };
enum class Composition { kIntersection, kUnion };
enum class ExplicitMode { kMinimalGiven, kArbitraryWinning };

std::string to_string(Form form);
std::string to_string(Composition kind);

namespace detail {
struct TableCache;
}

// A proper simple game (the empty coalition loses, the grand coalition wins)
// in one of four representations. Immutable; copies share the lazily built
// truth table.
class SimpleGame {
 public:
  static SimpleGame from_weighted(WeightedGame game);

  int players() const { return n_; }
  Form form() const { return form_; }

  // Minimal winning antichain, sorted by index. Explicit form only.
  const std::vector<Coalition>& antichain() const;
  // The single part of a weighted game. Weighted form only.
  const WeightedGame& weighted() const;
  // Weighted components; for the weighted form this is a one-element list.
  const std::vector<WeightedGame>& parts() const { return parts_; }

  bool is_winning(const Coalition& s) const;
  // Unchecked evaluation on an index-encoded coalition.
  bool wins_index(Mask index) const;

  // Built on first use; thread-safe.
  const TruthTable& truth_table() const;

 private:
  friend SimpleGame make_explicit(int, std::vector<Coalition>, ExplicitMode);
  friend SimpleGame combine(Composition, std::vector<WeightedGame>);

  SimpleGame(int n, Form form, std::vector<Mask> antichain,
             std::vector<WeightedGame> parts);

  int n_;
  Form form_;
  std::vector<Mask> antichain_index_;
  std::vector<Coalition> antichain_;
  std::vector<WeightedGame> parts_;
  std::shared_ptr<detail::TableCache> cache_;
};

// Explicit game whose winning family is the upward closure of `coalitions`.
SimpleGame make_explicit(int n, std::vector<Coalition> coalitions,
                         ExplicitMode mode);

SimpleGame combine(Composition kind, std::vector<WeightedGame> parts);

// Builds the table by direct evaluation, never through the cache.
TruthTable compute_truth_table(const SimpleGame& game);

}  // namespace simplegame

#endif  // SIMPLEGAME_GAME_HPP_
