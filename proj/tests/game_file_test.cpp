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

#include "simplegame/game_file.hpp"

#include "doctest.h"
#include "simplegame/generators.hpp"
#include "simplegame/structure.hpp"

namespace simplegame {
namespace {

ParseErrorCode error_code(const std::string& text, int* line = nullptr) {
  try {
    parse_game(text);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.code();
  }
  FAIL("expected a parse error");
  return ParseErrorCode::kBadHeader;
}

TEST_CASE("parse a weighted majority game") {
  auto g = parse_game("simplegame 1\nplayers 3\nform weighted\nwmg 2 : 1 1 1\n");
  REQUIRE(g.form() == Form::kWeighted);
  CHECK(g.weighted() == make_weighted(2, {1, 1, 1}));
}

TEST_CASE("parse the two-pair intersection") {
  auto g = parse_game(
      "simplegame 1\nplayers 4\nform intersection\nwmg 1 : 1 1 0 0\nwmg 1 : 0 0 1 1\n");
  CHECK(g.form() == Form::kIntersection);
  CHECK(equivalent(g, gen_example1(2)));
}

TEST_CASE("explicit body must be an antichain") {
  int line = 0;
  CHECK(error_code("simplegame 1\nplayers 4\nform explicit\nwin 1100\nwin 1110\n", &line) ==
        ParseErrorCode::kNotAntichain);
  CHECK(line == 5);
}

TEST_CASE("parse errors carry codes and line numbers") {
  int line = 0;
  CHECK(error_code("", &line) == ParseErrorCode::kBadHeader);
  CHECK(error_code("simplegame 2\nplayers 1\nform weighted\nwmg 1 : 1\n", &line) ==
        ParseErrorCode::kBadHeader);
  CHECK(line == 1);
  CHECK(error_code("simplegame 1\nplayers x\n", &line) == ParseErrorCode::kBadPlayers);
  CHECK(line == 2);
  CHECK(error_code("simplegame 1\nplayers 25\nform weighted\n", &line) ==
        ParseErrorCode::kTooManyPlayers);
  CHECK(error_code("simplegame 1\nplayers 2\nform matrix\nwin 10\n", &line) == ParseErrorCode::kBadForm);
  CHECK(line == 3);
  CHECK(error_code("simplegame 1\nplayers 2\nform explicit\n") == ParseErrorCode::kEmptyBody);
  CHECK(error_code("simplegame 1\nplayers 3\nform explicit\nwin 10\n", &line) ==
        ParseErrorCode::kBitstringLength);
  CHECK(line == 4);
  CHECK(error_code("simplegame 1\nplayers 2\nform explicit\nwin 1x\n") == ParseErrorCode::kBadBodyLine);
  CHECK(error_code("simplegame 1\nplayers 2\nform explicit\nwin 00\n") == ParseErrorCode::kInvalidWeights);
  CHECK(error_code("simplegame 1\nplayers 2\nform union\nwmg 1 : 1 1\n\nwmg 0 : 1 1\n", &line) ==
        ParseErrorCode::kInvalidWeights);
  CHECK(line == 6);
  CHECK(error_code("simplegame 1\nplayers 2\nform union\nwmg 1 : 1\n") == ParseErrorCode::kInvalidWeights);
  CHECK(error_code("simplegame 1\nplayers 2\nform union\nwmg 5 : 1 1\n") == ParseErrorCode::kInvalidWeights);
  CHECK(error_code("simplegame 1\nplayers 2\nform union\nwmg 1 1 1\n") == ParseErrorCode::kBadBodyLine);
  CHECK(error_code("simplegame 1\nplayers 2\nform weighted\nwmg 1 : 1 1\nwmg 1 : 1 1\n") ==
        ParseErrorCode::kBadBodyLine);
}

TEST_CASE("error messages are versioned") {
  try {
    parse_game("simplegame 1\nplayers 3\nform explicit\nwin 10\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("E105 (format 1) line 4:", 0) == 0);
  }
}

TEST_CASE("serialize canonical text") {
  CHECK(serialize_game(gen_example1(2)) ==
        "simplegame 1\nplayers 4\nform intersection\nwmg 1 : 1 1 0 0\nwmg 1 : 0 0 1 1\n");
  auto maj = make_explicit(3, minimal_winning(SimpleGame::from_weighted(make_weighted(2, {1, 1, 1}))),
                           ExplicitMode::kMinimalGiven);
  CHECK(serialize_game(maj) == "simplegame 1\nplayers 3\nform explicit\nwin 110\nwin 101\nwin 011\n");
}

TEST_CASE("round trip preserves the game") {
  std::vector<SimpleGame> games{gen_example1(3), dual(gen_example1(3)), gen_ssp({3, {1, 2, 3}, 2}),
                                gen_unanimity_composition(4, {Coalition::of(4, {2, 3})}),
                                SimpleGame::from_weighted(make_weighted(4, {3, 2, 1, 0}))};
  for (std::uint64_t s = 0; s < 25; ++s) games.push_back(gen_random_monotone(1 + s % 12, 1 + s % 6, s));
  games.push_back(dual(games.back()));
  for (const auto& g : games) {
    const auto text = serialize_game(g);
    const auto back = parse_game(text);
    CHECK(back.form() == g.form());
    CHECK(equivalent(back, g));
    CHECK(serialize_game(back) == text);
  }
}

TEST_CASE("parser tolerates blank lines and CRLF") {
  auto g = parse_game("simplegame 1\r\n\r\nplayers 2\r\nform explicit\r\nwin 10\r\n\r\n");
  CHECK(g.antichain() == std::vector{Coalition::of(2, {1})});
}

}  // namespace
}  // namespace simplegame
