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

#include "marc/catalog.h"

#include <string>
#include <vector>

#include "marc/errors.h"

namespace marc {

namespace {

Rational Rat(long long v) { return Rational(v); }

}  // namespace

Game CoordinationCounterexample() { return BuildCounterexample(2); }

Game DominanceSolvableCounterexample() {
  return Game({{"x1", "y1"}, {"x2", "y2"}},
              {Rat(1), Rat(1), Rat(3), Rat(2), Rat(2), Rat(4), Rat(4), Rat(3)});
}

Game MatchingPennies() {
  return Game({{"heads", "tails"}, {"heads", "tails"}},
              {Rat(1), Rat(-1), Rat(-1), Rat(1), Rat(-1), Rat(1), Rat(1),
               Rat(-1)});
}

Game BuildCounterexample(std::size_t n) {
  if (n < 2) {
    throw InputError("counterexample needs at least 2 players, got " +
                     std::to_string(n));
  }
  // Indexed [own action of player 1][own action of player 2].
  static const long long kFirst[2][2] = {{2, 0}, {0, 1}};
  static const long long kSecond[2][2] = {{1, 0}, {0, 2}};
  std::vector<std::vector<std::string>> names(n, {"x1", "x2"});
  return Game::FromFunction(
      std::move(names),
      [](std::span<const std::size_t> a, std::size_t player) -> Rational {
        if (player == 0) return Rat(kFirst[a[0]][a[1]]);
        if (player == 1) return Rat(kSecond[a[0]][a[1]]);
        return Rat(a[player] == 0 ? 1 : 0);
      });
}

}  // namespace marc
