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

#ifndef SIMPLEGAME_GENERATORS_HPP_
#define SIMPLEGAME_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "simplegame/game.hpp"

namespace simplegame {

// Subset-sum instance (target b, items a_1..a_n) with d >= 2 gadget pairs.
struct SubsetSumInstance {
  std::int64_t target;
  std::vector<std::int64_t> items;
  int pairs;

  void validate() const;
  // True iff some subset of `items` sums exactly to `target`.
  bool has_solution() const;
};

// 2n players; S wins iff it meets every pair {2i-1, 2i}. Intersection of the
// n games [1; 0,..,0,1,1,0,..,0].
SimpleGame gen_example1(int pairs);

// The subset-sum reduction game on n + 2d players: intersection of d parts
// [3b+1; 3a_1, ..., 3a_n, gadget], where part j weighs 1 on players n+2j-1
// and n+2j and 0 on the other gadget players.
SimpleGame gen_ssp(const SubsetSumInstance& instance);

// Union of one unanimity game per block. Blocks must be disjoint.
SimpleGame gen_unanimity_composition(int n, const std::vector<Coalition>& blocks);

// SplitMix64 (Steele, Lea, Flood 2014). Fixed so random corpora are
// reproducible everywhere:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// Explicit game generated by the upward closure of m coalitions drawn as
//   index = 1 + next() % (2^n - 2)     (nonempty, proper; n = 1 draws {1})
// and reduced to its minimal antichain. 1 <= n <= 12, m >= 1.
SimpleGame gen_random_monotone(int n, int m, std::uint64_t seed);

}  // namespace simplegame

#endif  // SIMPLEGAME_GENERATORS_HPP_
