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

#include "simplegame/dimension.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "simplegame/rational_lp.hpp"
#include "simplegame/structure.hpp"

namespace simplegame {

namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("weight does not fit in 64 bits");
  return z.get_si();
}

WeightedGame integer_game(const std::vector<lp::Rational>& point) {
  mpz_class scale = 1;
  for (const auto& v : point) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(point.size());
  mpz_class g = 0;
  for (const auto& v : point) {
    mpz_class x = v.get_num() * (scale / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    ints.push_back(std::move(x));
  }
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i + 1 < ints.size(); ++i) weights.push_back(to_int64(ints[i] / g));
  return WeightedGame(to_int64(ints.back() / g), std::move(weights));
}

std::vector<lp::Rational> coalition_row(const Coalition& c, int n) {
  std::vector<lp::Rational> row(n + 1, 0);
  for (int j = 1; j <= n; ++j)
    if (c.contains(j)) row[j - 1] = 1;
  row[n] = -1;
  return row;
}

int player_count(std::span<const Coalition> a, std::span<const Coalition> b) {
  if (!a.empty()) return a.front().players();
  if (!b.empty()) return b.front().players();
  throw GameError("cannot infer the player count from two empty coalition lists");
}

void check_targets(std::size_t count) {
  if (count > static_cast<std::size_t>(kMaxCoverTargets))
    throw SizeLimitError(std::to_string(count) + " extremal coalitions exceed the cover limit of " +
                         std::to_string(kMaxCoverTargets));
}

class PartitionSearch {
 public:
  PartitionSearch(SeparabilityOracle& oracle, SearchStats& stats)
      : oracle_(oracle), stats_(stats), m_(static_cast<int>(oracle.target_count())) {
    compatible_.assign(m_, 0);
    for (int t = 0; t < m_; ++t) {
      compatible_[t] |= bit(t);
      for (int u = t + 1; u < m_; ++u)
        if (oracle_.feasible(bit(t) | bit(u))) {
          compatible_[t] |= bit(u);
          compatible_[u] |= bit(t);
        }
    }
    order_.resize(m_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [this](int a, int b) {
      return incompatible_degree(a) > incompatible_degree(b);
    });
  }

  int clique_lower_bound() const {
    BlockMask clique = 0;
    int size = 0;
    for (int t : order_)
      if ((clique & compatible_[t]) == 0) {
        clique |= bit(t);
        ++size;
      }
    return std::max(size, 1);
  }

  std::vector<BlockMask> first_fit() {
    std::vector<BlockMask> blocks;
    for (int t : order_) {
      bool placed = false;
      for (auto& b : blocks)
        if ((b & ~compatible_[t]) == 0 && oracle_.feasible(b | bit(t))) {
          b |= bit(t);
          placed = true;
          break;
        }
      if (!placed) blocks.push_back(bit(t));
    }
    return blocks;
  }

  std::optional<std::vector<BlockMask>> partition_into(int k) {
    blocks_.clear();
    if (assign(0, k)) return blocks_;
    return std::nullopt;
  }

 private:
  static BlockMask bit(int t) { return BlockMask{1} << t; }

  int incompatible_degree(int t) const { return m_ - std::popcount(compatible_[t]); }

  // Targets order_[pos..] still need a block; at most k blocks may be open.
  bool assign(int pos, int k) {
    if (pos == m_) return true;
    ++stats_.nodes;
    const int t = order_[pos];
    // Indexed: deeper levels may grow blocks_.
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if ((blocks_[b] & ~compatible_[t]) != 0 || !oracle_.feasible(blocks_[b] | bit(t))) continue;
      blocks_[b] |= bit(t);
      if (assign(pos + 1, k)) return true;
      blocks_[b] &= ~bit(t);
    }
    if (static_cast<int>(blocks_.size()) < k) {
      blocks_.push_back(bit(t));
      if (assign(pos + 1, k)) return true;
      blocks_.pop_back();
    }
    return false;
  }

  SeparabilityOracle& oracle_;
  SearchStats& stats_;
  int m_;
  std::vector<BlockMask> compatible_;
  std::vector<int> order_;
  std::vector<BlockMask> blocks_;
};

DimensionWitness checked(DimensionWitness w, const SimpleGame& source) {
  if (!equivalent(w.game(), source))
    throw std::logic_error("dimension witness is not equivalent to its source game");
  return w;
}

}  // namespace

std::optional<WeightedGame> separate(int n, std::span<const Coalition> winners,
                                     std::span<const Coalition> losers) {
  check_player_count(n);
  lp::LinearProgram prog(n + 1);
  prog.set_all_nonnegative();
  for (const auto& s : winners) {
    if (s.players() != n) throw GameError("coalition player count mismatch");
    prog.add(coalition_row(s, n), lp::Relation::kGreaterEqual, 0);
  }
  for (const auto& t : losers) {
    if (t.players() != n) throw GameError("coalition player count mismatch");
    prog.add(coalition_row(t, n), lp::Relation::kLessEqual, -1);
  }
  std::vector<lp::Rational> quota_row(n + 1, 0);
  quota_row[n] = 1;
  prog.add(std::move(quota_row), lp::Relation::kGreaterEqual, 1);
  prog.add(coalition_row(Coalition::grand(n), n), lp::Relation::kGreaterEqual, 0);

  auto result = lp::solve_feasibility(prog);
  if (!result.feasible()) return std::nullopt;
  return integer_game(result.point);
}

std::optional<WeightedGame> co_realizable(std::span<const Coalition> mwc,
                                          std::span<const Coalition> blocked) {
  return separate(player_count(mwc, blocked), mwc, blocked);
}

std::optional<WeightedGame> realizable(std::span<const Coalition> mlc,
                                       std::span<const Coalition> covered) {
  return separate(player_count(mlc, covered), covered, mlc);
}

SeparabilityOracle::SeparabilityOracle(int n, std::vector<Coalition> fixed,
                                       std::vector<Coalition> targets, TargetSide side)
    : n_(n), fixed_(std::move(fixed)), targets_(std::move(targets)), side_(side) {
  check_player_count(n);
  if (targets_.size() > 64) throw SizeLimitError("at most 64 oracle targets are supported");
}

std::optional<std::optional<WeightedGame>> SeparabilityOracle::lookup(BlockMask block) const {
  std::shared_lock lock(mutex_);
  if (auto it = memo_.find(block); it != memo_.end()) return it->second;
  for (BlockMask bad : infeasible_sets_)
    if ((bad & ~block) == 0) return std::optional<WeightedGame>{};
  for (BlockMask good : feasible_sets_)
    if ((block & ~good) == 0) return memo_.at(good);
  return std::nullopt;
}

std::optional<WeightedGame> SeparabilityOracle::query(BlockMask block) {
  if (auto hit = lookup(block)) return *hit;

  std::vector<Coalition> chosen;
  for (std::size_t i = 0; i < targets_.size(); ++i)
    if ((block >> i & 1U) != 0) chosen.push_back(targets_[i]);
  auto game = side_ == TargetSide::kLosing ? separate(n_, fixed_, chosen)
                                           : separate(n_, chosen, fixed_);

  std::unique_lock lock(mutex_);
  ++lp_calls_;
  auto [it, inserted] = memo_.insert_or_assign(block, game);
  if (inserted) (game ? feasible_sets_ : infeasible_sets_).push_back(block);
  return it->second;
}

std::uint64_t SeparabilityOracle::lp_calls() const {
  std::shared_lock lock(mutex_);
  return lp_calls_;
}

DimensionWitness min_partition(SeparabilityOracle& oracle, Composition kind) {
  DimensionWitness out;
  out.kind = kind;
  const std::uint64_t calls_before = oracle.lp_calls();
  PartitionSearch search(oracle, out.stats);

  std::vector<BlockMask> best = search.first_fit();
  out.stats.lower_bound = search.clique_lower_bound();
  out.stats.upper_bound = static_cast<int>(best.size());
  for (int k = out.stats.lower_bound; k < out.stats.upper_bound; ++k) {
    if (auto found = search.partition_into(k)) {
      best = std::move(*found);
      break;
    }
  }
  out.value = static_cast<int>(best.size());
  for (BlockMask b : best) out.parts.push_back(*oracle.query(b));
  out.stats.lp_calls = oracle.lp_calls() - calls_before;
  return out;
}

DimensionWitness dimension(const SimpleGame& game) {
  auto ext = extremal_sets(game);
  check_targets(ext.maximal_losing.size());
  SeparabilityOracle oracle(game.players(), std::move(ext.minimal_winning),
                            std::move(ext.maximal_losing),
                            SeparabilityOracle::TargetSide::kLosing);
  return checked(min_partition(oracle, Composition::kIntersection), game);
}

DimensionWitness codimension(const SimpleGame& game) {
  auto ext = extremal_sets(game);
  check_targets(ext.minimal_winning.size());
  SeparabilityOracle oracle(game.players(), std::move(ext.maximal_losing),
                            std::move(ext.minimal_winning),
                            SeparabilityOracle::TargetSide::kWinning);
  return checked(min_partition(oracle, Composition::kUnion), game);
}

std::optional<WeightedGame> is_weighted(const SimpleGame& game) {
  if (game.form() == Form::kWeighted) return game.weighted();
  const auto ext = extremal_sets(game);
  return co_realizable(ext.minimal_winning, ext.maximal_losing);
}

std::vector<WeightedGame> canonical_intersection(const SimpleGame& game) {
  const int n = game.players();
  std::vector<WeightedGame> parts;
  for (const auto& t : maximal_losing(game)) {
    std::vector<std::int64_t> w(n, 1);
    for (int j : t.player_list()) w[j - 1] = 0;
    parts.emplace_back(1, std::move(w));
  }
  return parts;
}

std::vector<WeightedGame> canonical_union(const SimpleGame& game) {
  const int n = game.players();
  std::vector<WeightedGame> parts;
  for (const auto& s : minimal_winning(game)) {
    std::vector<std::int64_t> w(n, 0);
    for (int j : s.player_list()) w[j - 1] = 1;
    parts.emplace_back(s.size(), std::move(w));
  }
  return parts;
}

std::vector<WeightedGame> convert(const SimpleGame& game, Composition to, ConversionMode mode) {
  if (mode == ConversionMode::kCanonical)
    return to == Composition::kIntersection ? canonical_intersection(game) : canonical_union(game);
  return (to == Composition::kIntersection ? dimension(game) : codimension(game)).parts;
}

}  // namespace simplegame
