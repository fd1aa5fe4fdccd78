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

#include "simplegame/structure.hpp"

#include <algorithm>

namespace simplegame {

namespace {

std::vector<Coalition> scan(const SimpleGame& game, bool winning_side) {
  const int n = game.players();
  const auto& table = game.truth_table();
  std::vector<Coalition> out;
  const Mask count = full_index(n);
  for (Mask s = 0;; ++s) {
    if (table[s] == winning_side) {
      bool extremal = true;
      for (int i = 0; i < n && extremal; ++i) {
        const Mask bit = Mask{1} << i;
        // Minimal winning: every S - {i} loses. Maximal losing: every S + {i} wins.
        if (winning_side && (s & bit) != 0 && table[s ^ bit]) extremal = false;
        if (!winning_side && (s & bit) == 0 && !table[s | bit]) extremal = false;
      }
      if (extremal) out.push_back(Coalition::from_index(n, s));
    }
    if (s == count) break;
  }
  return out;
}

}  // namespace

std::vector<Coalition> minimal_winning(const SimpleGame& game) {
  if (game.form() == Form::kExplicit) return game.antichain();
  return scan(game, true);
}

std::vector<Coalition> maximal_losing(const SimpleGame& game) { return scan(game, false); }

ExtremalSets extremal_sets(const SimpleGame& game) {
  return {minimal_winning(game), maximal_losing(game)};
}

WeightedGame dual(const WeightedGame& game) {
  return WeightedGame(game.total_weight() - game.quota() + 1, game.weights());
}

SimpleGame dual(const SimpleGame& game) {
  switch (game.form()) {
    case Form::kWeighted:
      return SimpleGame::from_weighted(dual(game.weighted()));
    case Form::kIntersection:
    case Form::kUnion: {
      std::vector<WeightedGame> parts;
      parts.reserve(game.parts().size());
      for (const auto& p : game.parts()) parts.push_back(dual(p));
      return combine(game.form() == Form::kIntersection ? Composition::kUnion
                                                        : Composition::kIntersection,
                     std::move(parts));
    }
    case Form::kExplicit:
      break;
  }
  std::vector<Coalition> winners;
  for (const auto& t : maximal_losing(game)) winners.push_back(t.complement());
  return make_explicit(game.players(), std::move(winners), ExplicitMode::kMinimalGiven);
}

bool equivalent(const SimpleGame& a, const SimpleGame& b) {
  if (a.players() != b.players()) return false;
  if (a.form() == Form::kExplicit && b.form() == Form::kExplicit)
    return a.antichain() == b.antichain();
  return a.truth_table() == b.truth_table();
}

bool is_self_dual(const SimpleGame& game) { return equivalent(game, dual(game)); }

}  // namespace simplegame
