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

#ifndef MARC_CATALOG_H_
#define MARC_CATALOG_H_

#include <cstddef>

#include "marc/game.h"

namespace marc {

// The 2x2 coordination game with payoffs (2,1) on (x1,x1), (1,2) on (x2,x2)
// and zero elsewhere.
Game CoordinationCounterexample();

// Two-player dominance-solvable game: rows x1, y1; columns x2, y2;
// payoffs (1,1) (3,2) / (2,4) (4,3).
Game DominanceSolvableCounterexample();

Game MatchingPennies();

// n-player extension of the coordination game: players 1 and 2 are paid as
// in the 2x2 game regardless of the others, every later player earns 1 for
// x1 and 0 for x2. Throws InputError for n < 2.
Game BuildCounterexample(std::size_t n);

}  // namespace marc

#endif  // MARC_CATALOG_H_
