// Copyright 2026 The MARC Solver Authors. All rights reserved.
//
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

#ifndef MARC_HARNESS_H_
#define MARC_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "marc/game.h"
#include "marc/rational.h"

namespace marc {

// xorshift64* generator (Vigna 2016): shifts 12, 25, 27 and multiplier
// 0x2545F4914F6CDD1D. The state is seeded as seed ^ 0x9E3779B97F4A7C15 and
// replaced by that constant if it comes out zero. Fully specified so that
// other implementations can reproduce every generated game.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t Next();
  // lo + Next() % (hi - lo + 1); requires lo <= hi.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

enum class GameClass { kGeneral, kZeroSum, kStrictlyDominant };

const char* GameClassName(GameClass c);

struct GeneratorSpec {
  std::uint64_t seed = 20240601;
  std::size_t min_players = 2;
  std::size_t max_players = 2;
  std::size_t min_actions = 2;
  std::size_t max_actions = 4;
  std::int64_t payoff_lo = -5;
  std::int64_t payoff_hi = 5;
  GameClass game_class = GameClass::kGeneral;
};

// Draw order per game: player count, then one action count per player, then
// payoffs cell by cell (player 1 slowest) and player by player within a
// cell. kZeroSum draws only u_1 and sets u_2 = -u_1 (and forces two
// players). kStrictlyDominant then draws a dominant action d_i per player and
// raises u_i(d_i, s_-i) to 1 + max over other actions of u_i(a, s_-i).
std::vector<Game> Generate(const GeneratorSpec& spec, std::size_t count);

struct TrialResult {
  std::size_t index = 0;
  bool passed = false;
  bool nontrivial = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  GeneratorSpec spec;
  std::size_t count = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // Instances that exercise the invariant beyond its easy case (see each
  // suite); a suite with zero nontrivial instances proves nothing.
  std::size_t nontrivial = 0;
  std::string nontrivial_meaning;
  std::vector<TrialResult> trials;

  bool ok() const { return failed == 0 && passed == count && nontrivial > 0; }
};

// Registered suite names, in a stable order.
const std::vector<std::string>& SuiteNames();

// The generator spec each suite uses by default.
GeneratorSpec DefaultSpec(const std::string& suite);

// Runs a registered suite over `count` trials. Throws InputError on an
// unknown name.
SuiteReport RunSuite(const std::string& name, const GeneratorSpec& spec,
                     std::size_t count);

}  // namespace marc

#endif  // MARC_HARNESS_H_
