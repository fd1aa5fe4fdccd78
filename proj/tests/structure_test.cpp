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

#include "doctest.h"
#include "oracles.hpp"
#include "simplegame/generators.hpp"

namespace simplegame {
namespace {

using testing::indices;

std::vector<Mask> idx(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Mask> out;
  for (auto s : sets) out.push_back(Coalition::of(n, s).index());
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGame weighted(std::int64_t q, std::vector<std::int64_t> w) {
  return SimpleGame::from_weighted(make_weighted(q, std::move(w)));
}

std::vector<SimpleGame> corpus() {
  std::vector<SimpleGame> games;
  for (int n = 1; n <= 4; ++n) games.push_back(gen_example1(n));
  games.push_back(dual(gen_example1(3)));
  games.push_back(weighted(2, {1, 1, 1}));
  games.push_back(weighted(5, {3, 2, 2, 1, 1}));
  games.push_back(gen_ssp({3, {1, 2, 3}, 2}));
  games.push_back(gen_ssp({2, {5, 7}, 2}));
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    games.push_back(gen_random_monotone(3 + static_cast<int>(seed % 6), 2 + static_cast<int>(seed % 4), seed));
  return games;
}

TEST_CASE("minimal winning coalitions") {
  CHECK(indices(minimal_winning(gen_example1(2))) == idx(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  CHECK(indices(minimal_winning(weighted(2, {1, 1, 1}))) == idx(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(indices(minimal_winning(weighted(4, {1, 1, 1, 1}))) == idx(4, {{1, 2, 3, 4}}));
}

TEST_CASE("maximal losing coalitions") {
  CHECK(indices(maximal_losing(gen_example1(2))) == idx(4, {{1, 2}, {3, 4}}));
  CHECK(indices(maximal_losing(weighted(2, {1, 1, 1}))) == idx(3, {{1}, {2}, {3}}));
  CHECK(indices(maximal_losing(weighted(1, {1, 1}))) == std::vector<Mask>{0});
}

TEST_CASE("extremal sets agree with the all-subsets definition") {
  for (const auto& g : corpus()) {
    const auto rule = testing::game_rule(g);
    CHECK(indices(minimal_winning(g)) == testing::brute_minimal_winning(g.players(), rule));
    CHECK(indices(maximal_losing(g)) == testing::brute_maximal_losing(g.players(), rule));
  }
}

TEST_CASE("extremal outputs are antichains") {
  for (const auto& g : corpus()) {
    for (const auto& family : {minimal_winning(g), maximal_losing(g)}) {
      int comparable = 0;
      for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j)
          if (i != j && family[i].subset_of(family[j])) ++comparable;
      CHECK(comparable == 0);
    }
  }
}

TEST_CASE("dual of weighted and composite forms") {
  auto d = dual(make_weighted(2, {1, 1, 1}));
  CHECK(d == make_weighted(2, {1, 1, 1}));

  auto g = gen_example1(3);
  auto gd = dual(g);
  REQUIRE(gd.form() == Form::kUnion);
  REQUIRE(gd.parts().size() == 3);
  CHECK(gd.parts()[0] == make_weighted(2, {1, 1, 0, 0, 0, 0}));
  CHECK(equivalent(gd, gen_unanimity_composition(
                           6, {Coalition::of(6, {1, 2}), Coalition::of(6, {3, 4}),
                               Coalition::of(6, {5, 6})})));
  CHECK(dual(gd).form() == Form::kIntersection);
}

TEST_CASE("dual follows the definition on every form") {
  for (const auto& g : corpus()) {
    const int n = g.players();
    const auto d = dual(g);
    const auto explicit_g = make_explicit(n, minimal_winning(g), ExplicitMode::kMinimalGiven);
    const auto d_explicit = dual(explicit_g);
    CHECK(d_explicit.form() == Form::kExplicit);
    int mismatches = 0;
    for (Mask s = 0; s <= full_index(n); ++s) {
      const bool expect = !g.wins_index(full_index(n) & ~s);
      if (d.wins_index(s) != expect || d_explicit.wins_index(s) != expect) ++mismatches;
    }
    CHECK(mismatches == 0);
    CHECK(equivalent(dual(d), g));
    CHECK(equivalent(dual(d_explicit), explicit_g));
  }
}

TEST_CASE("weighted dual formula: S wins in the dual iff w(N - S) <= q - 1") {
  const auto w = make_weighted(6, {4, 3, 2, 2, 1});
  const auto d = SimpleGame::from_weighted(dual(w));
  for (Mask s = 0; s < 32; ++s)
    CHECK(d.wins_index(s) == (w.weight_of_index(31 & ~s) <= w.quota() - 1));
}

TEST_CASE("complement bijection between dual minimal winning and maximal losing") {
  for (const auto& g : corpus()) {
    std::vector<Mask> complements;
    for (const auto& t : maximal_losing(g)) complements.push_back(t.complement().index());
    std::sort(complements.begin(), complements.end());
    CHECK(indices(minimal_winning(dual(g))) == complements);
  }
}

TEST_CASE("equivalent") {
  CHECK_FALSE(equivalent(weighted(1, {1, 1}), weighted(2, {1, 1})));
  CHECK(equivalent(weighted(2, {1, 1, 1}), weighted(3, {2, 2, 2})));
  CHECK_FALSE(equivalent(weighted(1, {1, 1}), weighted(1, {1, 1, 1})));
  auto e = make_explicit(4, minimal_winning(gen_example1(2)), ExplicitMode::kMinimalGiven);
  CHECK(equivalent(e, gen_example1(2)));
  CHECK(equivalent(gen_example1(2), e));
}

TEST_CASE("is_self_dual") {
  CHECK(is_self_dual(weighted(2, {1, 1, 1})));
  CHECK_FALSE(is_self_dual(gen_example1(2)));
  CHECK(is_self_dual(weighted(1, {1, 0})));
}

}  // namespace
}  // namespace simplegame
