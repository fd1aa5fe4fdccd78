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

#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "simplegame/generators.hpp"

namespace simplegame {
namespace {

using testing::example1_rule;
using testing::matches_rule;

TEST_CASE("coalition encodes player j as bit j") {
  auto c = Coalition::of(4, {1, 3});
  CHECK(c.members() == 0b01010);
  CHECK(c.index() == 0b0101);
  CHECK(c.contains(1));
  CHECK_FALSE(c.contains(2));
  CHECK(c.size() == 2);
  CHECK(c.complement() == Coalition::of(4, {2, 4}));
  CHECK(Coalition::from_index(4, 0b0101) == c);
  CHECK(Coalition::grand(3).player_list() == std::vector<int>{1, 2, 3});
}

TEST_CASE("coalition rejects bits outside 1..n") {
  CHECK_THROWS_AS(Coalition(3, 0b0001), GameError);   // bit 0
  CHECK_THROWS_AS(Coalition(3, 0b10000), GameError);  // player 4
  CHECK_THROWS_AS(Coalition::of(3, {4}), GameError);
  CHECK_THROWS_AS(Coalition::of(25, {1}), SizeLimitError);
  CHECK_THROWS_AS(Coalition::of(0, {}), GameError);
}

TEST_CASE("make_weighted validates quota and weights") {
  auto g = make_weighted(2, {1, 1, 1});
  CHECK(g.total_weight() == 3);
  CHECK(g.wins(Coalition::of(3, {1, 2})));
  CHECK_FALSE(g.wins(Coalition::of(3, {3})));

  CHECK_THROWS_AS(make_weighted(0, {1, 1}), GameError);
  CHECK_THROWS_AS(make_weighted(2, {1, -1, 3}), GameError);
  CHECK_THROWS_AS(make_weighted(4, {1, 1, 1}), GameError);

  // First component of the reduction game for (3; 1,2,3) with two gadget pairs.
  auto part = make_weighted(10, {3, 6, 9, 1, 1, 0, 0});
  CHECK(part.total_weight() == 20);
}

TEST_CASE("make_explicit keeps the upward closure of a dictator") {
  auto g = make_explicit(2, {Coalition::of(2, {1})}, ExplicitMode::kMinimalGiven);
  CHECK(g.is_winning(Coalition::of(2, {1})));
  CHECK(g.is_winning(Coalition::of(2, {1, 2})));
  CHECK_FALSE(g.is_winning(Coalition::of(2, {2})));
  CHECK_FALSE(g.is_winning(Coalition::empty(2)));
  CHECK(g.truth_table().count_winning() == 2);
}

TEST_CASE("make_explicit in arbitrary mode discards non-minimal coalitions") {
  auto g = make_explicit(2, {Coalition::of(2, {1}), Coalition::of(2, {1, 2})},
                         ExplicitMode::kArbitraryWinning);
  REQUIRE(g.antichain().size() == 1);
  CHECK(g.antichain().front() == Coalition::of(2, {1}));
}

TEST_CASE("make_explicit rejects bad inputs") {
  CHECK_THROWS_AS(make_explicit(2, {Coalition::empty(2)}, ExplicitMode::kArbitraryWinning),
                  GameError);
  CHECK_THROWS_AS(make_explicit(2, {Coalition::of(2, {1}), Coalition::of(2, {1, 2})},
                                ExplicitMode::kMinimalGiven),
                  GameError);
  CHECK_THROWS_AS(make_explicit(2, {}, ExplicitMode::kMinimalGiven), GameError);
  CHECK_THROWS_AS(make_explicit(25, {}, ExplicitMode::kMinimalGiven), SizeLimitError);
  CHECK_THROWS_AS(make_explicit(3, {Coalition::of(2, {1})}, ExplicitMode::kMinimalGiven),
                  GameError);
}

TEST_CASE("explicit pairs game agrees with the pairs rule on all 16 coalitions") {
  auto g = make_explicit(4,
                         {Coalition::of(4, {1, 3}), Coalition::of(4, {1, 4}),
                          Coalition::of(4, {2, 3}), Coalition::of(4, {2, 4})},
                         ExplicitMode::kMinimalGiven);
  CHECK(matches_rule(g, example1_rule(2)));
}

TEST_CASE("is_winning on the two-pair game") {
  auto g = gen_example1(2);
  CHECK(g.is_winning(Coalition::of(4, {1, 3})));
  CHECK_FALSE(g.is_winning(Coalition::of(4, {1, 2})));
  CHECK_FALSE(g.is_winning(Coalition::empty(4)));
  CHECK(g.is_winning(Coalition::grand(4)));
  CHECK_THROWS_AS(g.is_winning(Coalition::of(3, {1})), GameError);
}

TEST_CASE("combine") {
  SUBCASE("intersection of pair games is the pairs game") {
    auto g = combine(Composition::kIntersection,
                     {make_weighted(1, {1, 1, 0, 0}), make_weighted(1, {0, 0, 1, 1})});
    CHECK(g.form() == Form::kIntersection);
    CHECK(matches_rule(g, example1_rule(2)));
  }
  SUBCASE("union of pair unanimities wins iff some pair is complete") {
    auto g = combine(Composition::kUnion,
                     {make_weighted(2, {1, 1, 0, 0}), make_weighted(2, {0, 0, 1, 1})});
    CHECK(matches_rule(g, [](Mask s) { return (s & 3U) == 3U || (s & 12U) == 12U; }));
  }
  SUBCASE("single part is the weighted game itself") {
    auto part = make_weighted(2, {1, 1, 1});
    auto g = combine(Composition::kIntersection, {part});
    CHECK(matches_rule(g, testing::game_rule(SimpleGame::from_weighted(part))));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(combine(Composition::kUnion, {}), GameError);
    CHECK_THROWS_AS(combine(Composition::kUnion, {make_weighted(1, {1}), make_weighted(1, {1, 1})}),
                    GameError);
  }
}

TEST_CASE("weighted truth table matches direct weight sums") {
  auto g = SimpleGame::from_weighted(make_weighted(7, {1, 2, 3, 4, 5}));
  const auto& t = g.truth_table();
  for (Mask s = 0; s < 32; ++s) CHECK(t[s] == (g.parts()[0].weight_of_index(s) >= 7));
}

TEST_CASE("monotonicity, properness and antichain minimality on random games") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    auto g = gen_random_monotone(n, 1 + static_cast<int>(seed % 5), seed);
    const auto& t = g.truth_table();
    CHECK_FALSE(t[0]);
    CHECK(t[full_index(n)]);
    // All pairs S ⊆ T for n <= 10.
    int violations = 0;
    for (Mask s = 0; s <= full_index(n); ++s)
      for (Mask u = s;; u = (u + 1) | s) {
        if (t[s] && !t[u]) ++violations;
        if (u == full_index(n)) break;
      }
    CHECK(violations == 0);
    for (const auto& c : g.antichain())
      for (int j : c.player_list())
        CHECK_FALSE(g.is_winning(Coalition(n, c.members() & ~(Mask{1} << j))));
  }
}

TEST_CASE("explicit to truth table and back yields the same game") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen_random_monotone(6, 4, seed);
    std::vector<Coalition> winners;
    for (Mask s = 0; s < 64; ++s)
      if (g.truth_table()[s]) winners.push_back(Coalition::from_index(6, s));
    auto rebuilt = make_explicit(6, winners, ExplicitMode::kArbitraryWinning);
    CHECK(rebuilt.antichain() == g.antichain());
  }
}

TEST_CASE("truth table cache is shared across copies and threads") {
  auto g = gen_example1(8);
  auto copy = g;
  std::vector<std::thread> workers;
  std::vector<const TruthTable*> seen(4);
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] { seen[i] = &(i % 2 ? copy : g).truth_table(); });
  for (auto& w : workers) w.join();
  for (auto* p : seen) CHECK(p == seen[0]);
  CHECK(*seen[0] == compute_truth_table(g));
}

}  // namespace
}  // namespace simplegame
