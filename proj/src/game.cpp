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

#include "simplegame/game.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <optional>
#include <utility>

namespace simplegame {

namespace detail {
struct TableCache {
  std::once_flag once;
  std::optional<TruthTable> table;
};
}  // namespace detail

void check_player_count(int n) {
  if (n < 1) throw GameError("player count must be at least 1");
  if (n > kMaxPlayers)
    throw SizeLimitError("player count " + std::to_string(n) +
                         " exceeds the limit of " + std::to_string(kMaxPlayers));
}

Coalition::Coalition(int n, Mask members) : n_(n), members_(members) {
  check_player_count(n);
  if ((members & ~(full_index(n) << 1)) != 0)
    throw GameError("coalition has members outside players 1.." +
                    std::to_string(n));
}

Coalition Coalition::of(int n, std::initializer_list<int> players) {
  check_player_count(n);
  Mask m = 0;
  for (int p : players) {
    if (p < 1 || p > n)
      throw GameError("player " + std::to_string(p) + " out of range 1.." +
                      std::to_string(n));
    m |= Mask{1} << p;
  }
  return Coalition(n, m);
}

Coalition Coalition::from_index(int n, Mask index) { return Coalition(n, index << 1); }

Coalition Coalition::grand(int n) {
  check_player_count(n);
  return Coalition(n, full_index(n) << 1);
}

bool Coalition::contains(int player) const {
  return player >= 1 && player <= n_ && (members_ >> player & 1U) != 0;
}

int Coalition::size() const { return std::popcount(members_); }

bool Coalition::subset_of(const Coalition& other) const {
  return n_ == other.n_ && (members_ & ~other.members_) == 0;
}

Coalition Coalition::complement() const {
  return Coalition(n_, (full_index(n_) << 1) & ~members_);
}

std::vector<int> Coalition::player_list() const {
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

WeightedGame::WeightedGame(std::int64_t quota, std::vector<std::int64_t> weights)
    : quota_(quota), weights_(std::move(weights)), total_(0) {
  check_player_count(players());
  if (quota_ < 1) throw GameError("quota must be at least 1");
  for (auto w : weights_) {
    if (w < 0) throw GameError("weights must be nonnegative");
    if (__builtin_add_overflow(total_, w, &total_))
      throw GameError("total weight overflows 64 bits");
  }
  if (total_ < quota_)
    throw GameError("total weight " + std::to_string(total_) +
                    " is below the quota " + std::to_string(quota_));
}

std::int64_t WeightedGame::weight_of(const Coalition& s) const {
  if (s.players() != players()) throw GameError("player count mismatch");
  return weight_of_index(s.index());
}

std::int64_t WeightedGame::weight_of_index(Mask index) const {
  std::int64_t sum = 0;
  while (index != 0) {
    sum += weights_[std::countr_zero(index)];
    index &= index - 1;
  }
  return sum;
}

WeightedGame make_weighted(std::int64_t quota, std::vector<std::int64_t> weights) {
  return WeightedGame(quota, std::move(weights));
}

TruthTable::TruthTable(int n, std::vector<std::uint8_t> winning)
    : n_(n), winning_(std::move(winning)) {
  if (winning_.size() != std::size_t{1} << n)
    throw GameError("truth table size does not match player count");
}

std::size_t TruthTable::count_winning() const {
  return static_cast<std::size_t>(
      std::count_if(winning_.begin(), winning_.end(), [](auto b) { return b != 0; }));
}

std::string to_string(Form form) {
  switch (form) {
    case Form::kExplicit: return "explicit";
    case Form::kWeighted: return "weighted";
    case Form::kIntersection: return "intersection";
    case Form::kUnion: return "union";
  }
  return "?";
}

std::string to_string(Composition kind) {
  return kind == Composition::kIntersection ? "intersection" : "union";
}

SimpleGame::SimpleGame(int n, Form form, std::vector<Mask> antichain,
                       std::vector<WeightedGame> parts)
    : n_(n),
      form_(form),
      antichain_index_(std::move(antichain)),
      parts_(std::move(parts)),
      cache_(std::make_shared<detail::TableCache>()) {
  antichain_.reserve(antichain_index_.size());
  for (Mask m : antichain_index_) antichain_.push_back(Coalition::from_index(n_, m));
}

SimpleGame SimpleGame::from_weighted(WeightedGame game) {
  int n = game.players();
  return SimpleGame(n, Form::kWeighted, {}, {std::move(game)});
}

const std::vector<Coalition>& SimpleGame::antichain() const {
  if (form_ != Form::kExplicit) throw GameError("game is not in explicit form");
  return antichain_;
}

const WeightedGame& SimpleGame::weighted() const {
  if (form_ != Form::kWeighted) throw GameError("game is not in weighted form");
  return parts_.front();
}

bool SimpleGame::is_winning(const Coalition& s) const {
  if (s.players() != n_)
    throw GameError("coalition over " + std::to_string(s.players()) +
                    " players evaluated in a game with " + std::to_string(n_));
  return wins_index(s.index());
}

bool SimpleGame::wins_index(Mask index) const {
  switch (form_) {
    case Form::kExplicit:
      return std::any_of(antichain_index_.begin(), antichain_index_.end(),
                         [index](Mask m) { return (m & ~index) == 0; });
    case Form::kWeighted:
      return parts_.front().wins_index(index);
    case Form::kIntersection:
      return std::all_of(parts_.begin(), parts_.end(),
                         [index](const WeightedGame& g) { return g.wins_index(index); });
    case Form::kUnion:
      return std::any_of(parts_.begin(), parts_.end(),
                         [index](const WeightedGame& g) { return g.wins_index(index); });
  }
  return false;
}

const TruthTable& SimpleGame::truth_table() const {
  std::call_once(cache_->once, [this] { cache_->table.emplace(compute_truth_table(*this)); });
  return *cache_->table;
}

namespace {

// Weight sums of all 2^n coalitions, split into two halves so memory stays
// at O(2^(n/2)).
void fill_weighted(const WeightedGame& g, std::vector<std::uint8_t>& out, bool first,
                   Composition kind) {
  const int n = g.players();
  const int low_bits = n / 2;
  const int high_bits = n - low_bits;
  auto half_sums = [&](int offset, int bits) {
    std::vector<std::int64_t> sums(std::size_t{1} << bits, 0);
    for (Mask s = 1; s < sums.size(); ++s)
      sums[s] = sums[s & (s - 1)] + g.weights()[offset + std::countr_zero(s)];
    return sums;
  };
  const auto low = half_sums(0, low_bits);
  const auto high = half_sums(low_bits, high_bits);
  const Mask low_mask = full_index(low_bits);
  for (Mask s = 0; s < out.size(); ++s) {
    const bool win = low[s & low_mask] + high[s >> low_bits] >= g.quota();
    if (first)
      out[s] = win;
    else if (kind == Composition::kIntersection)
      out[s] = out[s] && win;
    else
      out[s] = out[s] || win;
  }
}

}  // namespace

TruthTable compute_truth_table(const SimpleGame& game) {
  const int n = game.players();
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  if (game.form() == Form::kExplicit) {
    for (const auto& c : game.antichain()) table[c.index()] = 1;
    // Upward closure by a superset-sum pass over each player.
    for (int i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      for (Mask s = 0; s < table.size(); ++s)
        if ((s & bit) != 0 && table[s ^ bit] != 0) table[s] = 1;
    }
  } else {
    const auto kind = game.form() == Form::kUnion ? Composition::kUnion
                                                  : Composition::kIntersection;
    bool first = true;
    for (const auto& part : game.parts()) {
      fill_weighted(part, table, first, kind);
      first = false;
    }
  }
  return TruthTable(n, std::move(table));
}

SimpleGame make_explicit(int n, std::vector<Coalition> coalitions, ExplicitMode mode) {
  check_player_count(n);
  if (coalitions.empty()) throw GameError("explicit game needs at least one coalition");
  std::vector<Mask> masks;
  masks.reserve(coalitions.size());
  for (const auto& c : coalitions) {
    if (c.players() != n) throw GameError("coalition player count mismatch");
    if (c.is_empty()) throw GameError("the empty coalition cannot be winning");
    masks.push_back(c.index());
  }
  std::sort(masks.begin(), masks.end());
  if (mode == ExplicitMode::kMinimalGiven) {
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = 0; j < masks.size(); ++j)
        if (i != j && (masks[i] & ~masks[j]) == 0)
          throw GameError("coalitions do not form an antichain: " +
                          std::to_string(masks[i]) + " is contained in " +
                          std::to_string(masks[j]) + " (index encoding)");
  } else {
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> minimal;
    for (Mask m : masks) {
      bool dominated = std::any_of(masks.begin(), masks.end(), [m](Mask other) {
        return other != m && (other & ~m) == 0;
      });
      if (!dominated) minimal.push_back(m);
    }
    masks = std::move(minimal);
  }
  return SimpleGame(n, Form::kExplicit, std::move(masks), {});
}

SimpleGame combine(Composition kind, std::vector<WeightedGame> parts) {
  if (parts.empty()) throw GameError("cannot combine an empty list of games");
  const int n = parts.front().players();
  for (const auto& p : parts)
    if (p.players() != n) throw GameError("combined games have different player counts");
  return SimpleGame(n, kind == Composition::kIntersection ? Form::kIntersection : Form::kUnion,
                    {}, std::move(parts));
}

}  // namespace simplegame
