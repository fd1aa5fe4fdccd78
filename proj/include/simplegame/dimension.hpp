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

#ifndef SIMPLEGAME_DIMENSION_HPP_
#define SIMPLEGAME_DIMENSION_HPP_

#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "simplegame/game.hpp"

namespace simplegame {

// Largest number of extremal coalitions the partition search will cover.
inline constexpr int kMaxCoverTargets = 32;

using BlockMask = std::uint64_t;

// An integer weighted game that wins on every coalition of `winners` and
// loses on every coalition of `losers`, if one exists. Found by an exact
// rational feasibility solve of
//   w(S) >= q for S in winners,  w(T) <= q - 1 for T in losers,
//   q >= 1,  w(N) >= q,  w >= 0,
// followed by clearing denominators and dividing out the common gcd.
std::optional<WeightedGame> separate(int n, std::span<const Coalition> winners,
                                     std::span<const Coalition> losers);

// Intersection factor: wins on all of `mwc`, loses on all of `blocked`.
std::optional<WeightedGame> co_realizable(std::span<const Coalition> mwc,
                                          std::span<const Coalition> blocked);
// Union factor: loses on all of `mlc`, wins on all of `covered`.
std::optional<WeightedGame> realizable(std::span<const Coalition> mlc,
                                       std::span<const Coalition> covered);

// Memoized separability oracle over subsets of a fixed target list. Every
// block must keep the `fixed` coalitions on their side and flip the chosen
// targets to the other side. Feasibility is downward closed, so a cached
// feasible superset answers a query (with its own witness) and a cached
// infeasible subset refutes one.
//
// Thread-safe; concurrent writers for the same block store identical values.
class SeparabilityOracle {
 public:
  enum class TargetSide { kLosing, kWinning };

  SeparabilityOracle(int n, std::vector<Coalition> fixed, std::vector<Coalition> targets,
                     TargetSide side);

  std::size_t target_count() const { return targets_.size(); }
  const std::vector<Coalition>& targets() const { return targets_; }

  std::optional<WeightedGame> query(BlockMask block);
  bool feasible(BlockMask block) { return query(block).has_value(); }

  std::uint64_t lp_calls() const;

 private:
  std::optional<std::optional<WeightedGame>> lookup(BlockMask block) const;

  int n_;
  std::vector<Coalition> fixed_;
  std::vector<Coalition> targets_;
  TargetSide side_;

  mutable std::shared_mutex mutex_;
  std::unordered_map<BlockMask, std::optional<WeightedGame>> memo_;
  std::vector<BlockMask> feasible_sets_;
  std::vector<BlockMask> infeasible_sets_;
  std::uint64_t lp_calls_ = 0;
};

struct SearchStats {
  int lower_bound = 0;
  int upper_bound = 0;
  std::uint64_t nodes = 0;
  std::uint64_t lp_calls = 0;
};

struct DimensionWitness {
  int value = 0;
  std::vector<WeightedGame> parts;
  Composition kind = Composition::kIntersection;
  SearchStats stats;

  SimpleGame game() const { return combine(kind, parts); }
};

// Minimum number of blocks in a partition of the oracle's targets into
// feasible blocks, with one witness game per block. Iterative deepening from
// a clique lower bound of the pairwise incompatibility graph.
DimensionWitness min_partition(SeparabilityOracle& oracle, Composition kind);

// Exact dimension: the least k with game = G1 ∩ ... ∩ Gk, Gi weighted.
DimensionWitness dimension(const SimpleGame& game);
// Exact codimension: the least k with game = G1 ∪ ... ∪ Gk, Gi weighted.
DimensionWitness codimension(const SimpleGame& game);

std::optional<WeightedGame> is_weighted(const SimpleGame& game);

// One part [1; indicator of N \ T] per maximal losing T.
std::vector<WeightedGame> canonical_intersection(const SimpleGame& game);
// One part [|S|; indicator of S] per minimal winning S.
std::vector<WeightedGame> canonical_union(const SimpleGame& game);

enum class ConversionMode { kCanonical, kMinimal };

std::vector<WeightedGame> convert(const SimpleGame& game, Composition to, ConversionMode mode);

}  // namespace simplegame

#endif  // SIMPLEGAME_DIMENSION_HPP_
