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

#ifndef MARC_GAME_IO_H_
#define MARC_GAME_IO_H_

#include <string>
#include <string_view>

#include "marc/game.h"

namespace marc {

// Game documents are line oriented. '#' starts a comment that runs to the end
// of the line; blank lines are ignored.
//
//   players 2
//   actions x1 x2        # player 1
//   actions x1 x2        # player 2
//   payoffs
//   2 1                  # (x1, x1)
//   0 0                  # (x1, x2)
//   0 0                  # (x2, x1)
//   1 2                  # (x2, x2)
//
// One payoff row per pure profile, in lexicographic order of action indices
// with player 1 slowest; each row holds the n payoffs as integer or p/q
// literals. Action names are any whitespace-free tokens not starting with '#'.

// Throws ParseError carrying the kind and a 1-based line and column.
Game ParseGameText(std::string_view text);
Game ParseGameFile(const std::string& path);

// Writes a document that ParseGameText reads back to an equal game.
std::string WriteGame(const Game& game);

}  // namespace marc

#endif  // MARC_GAME_IO_H_
