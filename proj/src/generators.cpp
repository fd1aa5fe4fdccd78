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

#include "simplegame/generators.hpp"

#include <set>
#include <string>

namespace simplegame {

void SubsetSumInstance::validate() const {
  if (target < 1) throw GameError("subset-sum target must be positive");
  if (items.empty()) throw GameError("subset-sum instance needs at least one item");
  for (auto a : items)
    if (a < 1) throw GameError("subset-sum items must be positive");
  if (pairs < 2) throw GameError("the reduction needs at least 2 gadget pairs");
}

bool SubsetSumInstance::has_solution() const {
  std::set<std::int64_t> reachable{0};
  for (auto a : items) {
    std::set<std::int64_t> next = reachable;
    for (auto r : reachable)
      if (r + a <= target) next.insert(r + a);
    reachable = std::move(next);
  }
  return reachable.count(target) != 0;
}

SimpleGame gen_example1(int pairs) {
  if (pairs < 1) throw GameError("example1 needs at least one pair");
  if (2 * pairs > kMaxPlayers)
    throw SizeLimitError("example1 with " + std::to_string(pairs) + " pairs exceeds " +
                         std::to_string(kMaxPlayers) + " players");
  std::vector<WeightedGame> parts;
  for (int i = 0; i < pairs; ++i) {
    std::vector<std::int64_t> w(2 * pairs, 0);
    w[2 * i] = 1;
    w[2 * i + 1] = 1;
    parts.emplace_back(1, std::move(w));
  }
  return combine(Composition::kIntersection, std::move(parts));
}

SimpleGame gen_ssp(const SubsetSumInstance& instance) {
  instance.validate();
  const int n = static_cast<int>(instance.items.size());
  const int d = instance.pairs;
  if (n + 2 * d > kMaxPlayers)
    throw SizeLimitError("reduction game would have " + std::to_string(n + 2 * d) +
                         " players; the limit is " + std::to_string(kMaxPlayers));
  std::vector<WeightedGame> parts;
  for (int j = 0; j < d; ++j) {
    std::vector<std::int64_t> w(n + 2 * d, 0);
    for (int i = 0; i < n; ++i) w[i] = 3 * instance.items[i];
    w[n + 2 * j] = 1;
    w[n + 2 * j + 1] = 1;
    parts.emplace_back(3 * instance.target + 1, std::move(w));
  }
  return combine(Composition::kIntersection, std::move(parts));
}

SimpleGame gen_unanimity_composition(int n, const std::vector<Coalition>& blocks) {
  check_player_count(n);
  if (blocks.empty()) throw GameError("unanimity composition needs at least one block");
  Mask seen = 0;
  std::vector<WeightedGame> parts;
  for (const auto& b : blocks) {
    if (b.players() != n) throw GameError("block player count mismatch");
    if (b.is_empty()) throw GameError("unanimity blocks must be nonempty");
    if ((seen & b.members()) != 0) throw GameError("unanimity blocks overlap");
    seen |= b.members();
    std::vector<std::int64_t> w(n, 0);
    for (int j : b.player_list()) w[j - 1] = 1;
    parts.emplace_back(b.size(), std::move(w));
  }
  return combine(Composition::kUnion, std::move(parts));
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SimpleGame gen_random_monotone(int n, int m, std::uint64_t seed) {
  if (n < 1 || n > 12) throw GameError("random games support 1..12 players");
  if (m < 1) throw GameError("random games need at least one seed coalition");
  SplitMix64 rng(seed);
  std::vector<Coalition> drawn;
  const std::uint64_t proper = (std::uint64_t{1} << n) - 2;
  for (int i = 0; i < m; ++i) {
    const Mask index = proper == 0 ? 1 : static_cast<Mask>(1 + rng.next() % proper);
    drawn.push_back(Coalition::from_index(n, index));
  }
  // Any nonempty upward closure already contains N, so the result is proper.
  return make_explicit(n, std::move(drawn), ExplicitMode::kArbitraryWinning);
}

}  // namespace simplegame
