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

#ifndef SIMPLEGAME_GAME_FILE_HPP_
#define SIMPLEGAME_GAME_FILE_HPP_

#include <string>
#include <string_view>

#include "simplegame/game.hpp"

namespace simplegame {

// Text format, version 1:
//
//   simplegame 1
//   players <n>
//   form <explicit|weighted|intersection|union>
//   win 1101            (explicit: one minimal winning coalition per line,
//                        leftmost character is player 1)
//   wmg <q> : <w1> ... <wn>   (other forms: one weighted part per line)
//
// Blank lines are ignored.
inline constexpr int kGameFileVersion = 1;

enum class ParseErrorCode {
  kBadHeader = 101,
  kBadPlayers = 102,
  kBadForm = 103,
  kBadBodyLine = 104,
  kBitstringLength = 105,
  kNotAntichain = 106,
  kInvalidWeights = 107,
  kTooManyPlayers = 108,
  kEmptyBody = 109,
};

class ParseError : public GameError {
 public:
  ParseError(ParseErrorCode code, int line, const std::string& what);

  ParseErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ParseErrorCode code_;
  int line_;
};

SimpleGame parse_game(std::string_view text);

// Canonical text: coalitions ascending by index, parts in stored order.
std::string serialize_game(const SimpleGame& game);

// Body fragments shared with the CLI reports.
std::string bitstring(const Coalition& c);
std::string wmg_line(const WeightedGame& g);

}  // namespace simplegame

#endif  // SIMPLEGAME_GAME_FILE_HPP_
