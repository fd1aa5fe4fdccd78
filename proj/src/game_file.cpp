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

#include <charconv>
#include <sstream>
#include <vector>

namespace simplegame {

namespace {

std::string format_error(ParseErrorCode code, int line, const std::string& what) {
  return "E" + std::to_string(static_cast<int>(code)) + " (format " +
         std::to_string(kGameFileVersion) + ") line " + std::to_string(line) + ": " + what;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

struct Line {
  int number;
  std::vector<std::string_view> words;
};

}  // namespace

ParseError::ParseError(ParseErrorCode code, int line, const std::string& what)
    : GameError(format_error(code, line, what)), code_(code), line_(line) {}

SimpleGame parse_game(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto words = split_words(text.substr(pos, end - pos));
    if (!words.empty()) lines.push_back({number, std::move(words)});
    pos = end + 1;
  }

  auto header_line = [&](std::size_t i) { return i < lines.size() ? lines[i].number : number; };
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "simplegame")
    throw ParseError(ParseErrorCode::kBadHeader, header_line(0), "expected 'simplegame 1'");
  if (lines[0].words[1] != std::to_string(kGameFileVersion))
    throw ParseError(ParseErrorCode::kBadHeader, lines[0].number,
                     "unsupported format version '" + std::string(lines[0].words[1]) + "'");

  std::int64_t n = 0;
  if (lines.size() < 2 || lines[1].words.size() != 2 || lines[1].words[0] != "players" ||
      !parse_int(lines[1].words[1], n))
    throw ParseError(ParseErrorCode::kBadPlayers, header_line(1), "expected 'players <n>'");
  if (n < 1) throw ParseError(ParseErrorCode::kBadPlayers, lines[1].number, "player count must be positive");
  if (n > kMaxPlayers)
    throw ParseError(ParseErrorCode::kTooManyPlayers, lines[1].number,
                     std::to_string(n) + " players exceed the limit of " + std::to_string(kMaxPlayers));
  const int players = static_cast<int>(n);

  if (lines.size() < 3 || lines[2].words.size() != 2 || lines[2].words[0] != "form")
    throw ParseError(ParseErrorCode::kBadForm, header_line(2), "expected 'form <kind>'");
  const std::string_view form = lines[2].words[1];
  const bool is_explicit = form == "explicit";
  if (!is_explicit && form != "weighted" && form != "intersection" && form != "union")
    throw ParseError(ParseErrorCode::kBadForm, lines[2].number,
                     "unknown form '" + std::string(form) + "'");

  if (lines.size() < 4) throw ParseError(ParseErrorCode::kEmptyBody, number, "game has no body");

  if (is_explicit) {
    std::vector<Coalition> coalitions;
    for (std::size_t i = 3; i < lines.size(); ++i) {
      const auto& l = lines[i];
      if (l.words.size() != 2 || l.words[0] != "win")
        throw ParseError(ParseErrorCode::kBadBodyLine, l.number, "expected 'win <bitstring>'");
      const auto bits = l.words[1];
      if (static_cast<int>(bits.size()) != players)
        throw ParseError(ParseErrorCode::kBitstringLength, l.number,
                         "bitstring has length " + std::to_string(bits.size()) + ", expected " +
                             std::to_string(players));
      Mask index = 0;
      for (int j = 0; j < players; ++j) {
        if (bits[j] == '1')
          index |= Mask{1} << j;
        else if (bits[j] != '0')
          throw ParseError(ParseErrorCode::kBadBodyLine, l.number, "bitstring may only contain 0 and 1");
      }
      if (index == 0)
        throw ParseError(ParseErrorCode::kInvalidWeights, l.number, "the empty coalition cannot win");
      const auto c = Coalition::from_index(players, index);
      for (const auto& prev : coalitions)
        if (prev.subset_of(c) || c.subset_of(prev))
          throw ParseError(ParseErrorCode::kNotAntichain, l.number,
                           "coalition " + std::string(bits) + " is comparable with " + bitstring(prev));
      coalitions.push_back(c);
    }
    return make_explicit(players, std::move(coalitions), ExplicitMode::kMinimalGiven);
  }

  std::vector<WeightedGame> parts;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.words.size() < 3 || l.words[0] != "wmg" || l.words[2] != ":")
      throw ParseError(ParseErrorCode::kBadBodyLine, l.number, "expected 'wmg <q> : <w1> ... <wn>'");
    std::int64_t quota = 0;
    if (!parse_int(l.words[1], quota))
      throw ParseError(ParseErrorCode::kBadBodyLine, l.number, "quota is not an integer");
    if (static_cast<int>(l.words.size()) - 3 != players)
      throw ParseError(ParseErrorCode::kInvalidWeights, l.number,
                       "expected " + std::to_string(players) + " weights, found " +
                           std::to_string(l.words.size() - 3));
    std::vector<std::int64_t> weights(players);
    for (int j = 0; j < players; ++j)
      if (!parse_int(l.words[3 + j], weights[j]))
        throw ParseError(ParseErrorCode::kBadBodyLine, l.number, "weight is not an integer");
    try {
      parts.emplace_back(quota, std::move(weights));
    } catch (const GameError& e) {
      throw ParseError(ParseErrorCode::kInvalidWeights, l.number, e.what());
    }
  }
  if (form == "weighted") {
    if (parts.size() != 1)
      throw ParseError(ParseErrorCode::kBadBodyLine, lines[4].number,
                       "a weighted game has exactly one wmg line");
    return SimpleGame::from_weighted(std::move(parts.front()));
  }
  return combine(form == "intersection" ? Composition::kIntersection : Composition::kUnion,
                 std::move(parts));
}

std::string bitstring(const Coalition& c) {
  std::string s(c.players(), '0');
  for (int j = 1; j <= c.players(); ++j)
    if (c.contains(j)) s[j - 1] = '1';
  return s;
}

std::string wmg_line(const WeightedGame& g) {
  std::string s = "wmg " + std::to_string(g.quota()) + " :";
  for (auto w : g.weights()) s += " " + std::to_string(w);
  return s;
}

std::string serialize_game(const SimpleGame& game) {
  std::ostringstream out;
  out << "simplegame " << kGameFileVersion << "\n"
      << "players " << game.players() << "\n"
      << "form " << to_string(game.form()) << "\n";
  if (game.form() == Form::kExplicit) {
    for (const auto& c : game.antichain()) out << "win " << bitstring(c) << "\n";
  } else {
    for (const auto& p : game.parts()) out << wmg_line(p) << "\n";
  }
  return out.str();
}

}  // namespace simplegame
