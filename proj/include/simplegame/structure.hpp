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

#ifndef SIMPLEGAME_STRUCTURE_HPP_
#define SIMPLEGAME_STRUCTURE_HPP_

#include <vector>

#include "simplegame/game.hpp"

namespace simplegame {

struct ExtremalSets {
  std::vector<Coalition> minimal_winning;
  std::vector<Coalition> maximal_losing;
};

// Both enumerations scan all 2^n coalitions once; outputs are sorted by
// index encoding.
std::vector<Coalition> minimal_winning(const SimpleGame& game);
std::vector<Coalition> maximal_losing(const SimpleGame& game);
ExtremalSets extremal_sets(const SimpleGame& game);

// S wins in the dual iff N \ S loses. Weighted and composite forms are
// dualized part by part without enumeration:
//   [q; w]            -> [w(N) - q + 1; w]
//   intersection(Gi)  -> union(Gi*)
//   union(Gi)         -> intersection(Gi*)
// The explicit form goes through the maximal losing coalitions.
WeightedGame dual(const WeightedGame& game);
SimpleGame dual(const SimpleGame& game);

bool equivalent(const SimpleGame& a, const SimpleGame& b);
bool is_self_dual(const SimpleGame& game);

}  // namespace simplegame

#endif  // SIMPLEGAME_STRUCTURE_HPP_
