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

#include "simplegame/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "simplegame/dimension.hpp"
#include "simplegame/game_file.hpp"
#include "simplegame/generators.hpp"
#include "simplegame/structure.hpp"

namespace simplegame::cli {

namespace {

using nlohmann::json;

json parts_json(const std::vector<WeightedGame>& parts) {
  json arr = json::array();
  for (const auto& p : parts) arr.push_back({{"quota", p.quota()}, {"weights", p.weights()}});
  return arr;
}

json coalitions_json(const std::vector<Coalition>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(bitstring(c));
  return arr;
}

json game_json(const SimpleGame& g) {
  json j = {{"players", g.players()}, {"form", to_string(g.form())}};
  if (g.form() == Form::kExplicit)
    j["mwc"] = coalitions_json(g.antichain());
  else
    j["parts"] = parts_json(g.parts());
  return j;
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::string output_path;
  bool as_json = false;

  SimpleGame load(const std::string& path) const {
    if (path.empty() || path == "-") return parse_game(read_all(in));
    std::ifstream f(path);
    if (!f) throw GameError("cannot open '" + path + "'");
    return parse_game(read_all(f));
  }

  void emit(const std::string& text, const json& j) const {
    const std::string body = as_json ? j.dump(2) + "\n" : text;
    if (output_path.empty()) {
      out << body;
      return;
    }
    std::ofstream f(output_path);
    if (!f) throw GameError("cannot write '" + output_path + "'");
    f << body;
  }

  void emit_game(const SimpleGame& g) const { emit(serialize_game(g), game_json(g)); }
};

std::string witness_text(const std::string& label, const DimensionWitness& w) {
  std::string s = label + " " + std::to_string(w.value) + "\n";
  for (const auto& p : w.parts) s += wmg_line(p) + "\n";
  return s;
}

json witness_json(const DimensionWitness& w) {
  return {{"value", w.value}, {"kind", to_string(w.kind)}, {"parts", parts_json(w.parts)}};
}

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw GameError("'" + item + "' is not an integer");
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact analysis of simple games: extremal coalitions, duals, "
               "weightedness, dimension and codimension.",
               "simplegame"};
  app.require_subcommand(1);
  Context ctx{in, out, {}, false};
  app.add_option("-o,--output", ctx.output_path, "Write the report to a file");
  app.add_flag("--json", ctx.as_json, "Machine-readable report");

  std::function<void()> action;
  std::string file;
  auto game_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("game", file, "Game file (default: standard input)");
    return sub;
  };

  game_command("mwc", "List minimal winning coalitions")->callback([&] {
    action = [&] {
      const auto mwc = minimal_winning(ctx.load(file));
      std::string text = "minimal_winning " + std::to_string(mwc.size()) + "\n";
      for (const auto& c : mwc) text += "win " + bitstring(c) + "\n";
      ctx.emit(text, {{"mwc", coalitions_json(mwc)}});
    };
  });
  game_command("mlc", "List maximal losing coalitions")->callback([&] {
    action = [&] {
      const auto mlc = maximal_losing(ctx.load(file));
      std::string text = "maximal_losing " + std::to_string(mlc.size()) + "\n";
      for (const auto& c : mlc) text += "lose " + bitstring(c) + "\n";
      ctx.emit(text, {{"mlc", coalitions_json(mlc)}});
    };
  });
  game_command("dual", "Print the dual game")->callback([&] {
    action = [&] { ctx.emit_game(dual(ctx.load(file))); };
  });
  game_command("weighted", "Decide weightedness and print a representation")->callback([&] {
    action = [&] {
      const auto w = is_weighted(ctx.load(file));
      json j = {{"weighted", w.has_value()}, {"parts", parts_json(w ? std::vector{*w} : std::vector<WeightedGame>{})}};
      ctx.emit(w ? "weighted\n" + wmg_line(*w) + "\n" : "not weighted\n", j);
    };
  });
  game_command("dim", "Exact dimension with an intersection witness")->callback([&] {
    action = [&] {
      const auto w = dimension(ctx.load(file));
      ctx.emit(witness_text("dimension", w), witness_json(w));
    };
  });
  game_command("codim", "Exact codimension with a union witness")->callback([&] {
    action = [&] {
      const auto w = codimension(ctx.load(file));
      ctx.emit(witness_text("codimension", w), witness_json(w));
    };
  });

  std::vector<std::string> pair;
  auto* equiv = app.add_subcommand("equiv", "Compare two games");
  equiv->add_option("games", pair, "One or two game files; a missing second game is read from standard input")
      ->expected(1, 2)
      ->required();
  equiv->callback([&] {
    action = [&] {
      const auto a = ctx.load(pair[0]);
      const auto b = ctx.load(pair.size() > 1 ? pair[1] : "");
      const bool same = equivalent(a, b);
      ctx.emit(same ? "equivalent\n" : "different\n", {{"equivalent", same}});
    };
  });

  std::string to = "union";
  std::string mode = "canonical";
  auto* conv = game_command("convert", "Convert to an intersection or union of weighted games");
  conv->add_option("--to", to, "Target composition")
      ->check(CLI::IsMember({"intersection", "union"}))
      ->required();
  conv->add_option("--mode", mode, "canonical or minimal")->check(CLI::IsMember({"canonical", "minimal"}));
  conv->callback([&] {
    action = [&] {
      const auto kind = to == "intersection" ? Composition::kIntersection : Composition::kUnion;
      auto parts = convert(ctx.load(file), kind,
                           mode == "minimal" ? ConversionMode::kMinimal : ConversionMode::kCanonical);
      ctx.emit_game(combine(kind, std::move(parts)));
    };
  });

  auto* gen = app.add_subcommand("gen", "Generate a game");
  gen->require_subcommand(1);
  int pairs = 0;
  gen->add_subcommand("example1", "Pairs game: S wins iff it meets every pair {2i-1,2i}")
      ->callback([&] { action = [&] { ctx.emit_game(gen_example1(pairs)); }; })
      ->add_option("--n", pairs, "Number of pairs")
      ->required();

  std::int64_t target = 0;
  std::string items;
  int gadgets = 2;
  auto* ssp = gen->add_subcommand("ssp", "Subset-sum reduction game");
  ssp->add_option("--b", target, "Target sum")->required();
  ssp->add_option("--a", items, "Comma-separated items")->required();
  ssp->add_option("--d", gadgets, "Number of gadget pairs (>= 2)");
  ssp->callback([&] {
    action = [&] { ctx.emit_game(gen_ssp({target, parse_list(items), gadgets})); };
  });

  int players = 0;
  std::vector<std::string> blocks;
  auto* una = gen->add_subcommand("unanimity", "Union of unanimity games on disjoint blocks");
  una->add_option("--block", blocks, "Comma-separated players of one block (repeatable)")->required();
  una->add_option("--players", players, "Player count (default: largest listed player)");
  una->callback([&] {
    action = [&] {
      std::vector<std::vector<std::int64_t>> lists;
      std::int64_t top = 0;
      for (const auto& b : blocks) {
        lists.push_back(parse_list(b));
        for (auto p : lists.back()) top = std::max(top, p);
      }
      const int n = players > 0 ? players : static_cast<int>(std::min<std::int64_t>(top, kMaxPlayers + 1));
      check_player_count(n);
      std::vector<Coalition> cs;
      for (const auto& l : lists) {
        Mask m = 0;
        for (auto p : l) {
          if (p < 1 || p > n) throw GameError("player " + std::to_string(p) + " out of range");
          m |= Mask{1} << p;
        }
        cs.emplace_back(n, m);
      }
      ctx.emit_game(gen_unanimity_composition(n, cs));
    };
  });

  int seeds = 1;
  std::uint64_t seed = 0;
  auto* rnd = gen->add_subcommand("random", "Random monotone game (explicit form)");
  rnd->add_option("--n", players, "Player count (1..12)")->required();
  rnd->add_option("--m", seeds, "Number of generating coalitions");
  rnd->add_option("--seed", seed, "Generator seed");
  rnd->callback([&] { action = [&] { ctx.emit_game(gen_random_monotone(players, seeds, seed)); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    action();
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ParseErrorCode::kTooManyPlayers ? kExitSizeLimit : kExitInvalid;
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace simplegame::cli
