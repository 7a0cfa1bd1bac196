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

#ifndef MARC_EQUILIBRIUM_H_
#define MARC_EQUILIBRIUM_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "marc/game.h"
#include "marc/rational.h"

namespace marc {

// Pure maximizers of a player's expected payoff against fixed opponents.
// Mixed best responses are exactly the mixtures over pure_maximizers.
struct BestResponseSet {
  std::size_t player = 0;
  std::vector<std::size_t> pure_maximizers;  // ascending, nonempty
  Rational value;

  bool Contains(std::size_t action) const;
};

BestResponseSet BestResponse(const Game& game, std::size_t player,
                             const OpponentProfile& opponents);

// Every belief of `player` equals the actual strategy of that opponent.
bool IsCorrect(const ConjectureProfile& conjectures, const Profile& actual,
               std::size_t player);

// support(chosen) lies inside the best responses to `conjecture`.
bool IsRational(const Game& game, std::size_t player,
                const MixedStrategy& chosen, const OpponentProfile& conjecture);

struct NashReport {
  Profile profile;
  // Best-response value minus achieved value, per player. Always >= 0.
  std::vector<Rational> slack;

  bool is_nash() const;
};

NashReport CheckNash(const Game& game, const Profile& profile);

// Pure profiles where no player gains by a unilateral pure deviation, in
// lexicographic order of action indices.
std::vector<Profile> EnumeratePureNash(const Game& game);

struct MixedEquilibrium {
  Profile profile;
  // Set when the equilibrium is a vertex of a positive-dimensional set of
  // equilibria (some strategy of it pairs with more than one extreme
  // strategy of the other player).
  bool degenerate = false;
};

// All extreme Nash equilibria of a two-player game: pairs of vertices of the
// players' best-response polyhedra whose labels are complementary. Every
// equilibrium is a convex combination of extreme equilibria within a common
// maximal Nash subset. Ordered by total support size, then by weights in
// descending lexicographic order. Throws InputError unless the game has
// exactly two players.
std::vector<MixedEquilibrium> EnumerateMixedNash2p(const Game& game);

struct Elimination {
  std::size_t player = 0;
  std::size_t action = 0;      // index in the original game
  MixedStrategy dominator;     // over the original game's actions
};

struct DominanceResult {
  Game reduced;
  // surviving[i][k] is the original index of reduced action k of player i.
  std::vector<std::vector<std::size_t>> surviving;
  std::vector<Elimination> trace;
  std::vector<std::size_t> original_counts;

  // Lifts a profile of the reduced game to the original game.
  Profile Lift(const Profile& reduced_profile) const;
};

// If some pure action of `player` is strictly dominated by a mixture of the
// player's other actions against every pure profile of the remaining game,
// returns that dominating mixture. Decided by one exact LP.
std::optional<MixedStrategy> FindStrictDominator(const Game& game,
                                                 std::size_t player,
                                                 std::size_t action);

// Removes strictly dominated actions (dominators may be mixed) one at a time,
// scanning players then actions in index order, until none remain.
DominanceResult IteratedStrictDominance(const Game& game);

// Same, but only players in `eligible` may lose actions.
DominanceResult IteratedStrictDominance(const Game& game,
                                        const std::vector<bool>& eligible);

struct NashEnumeration {
  std::vector<MixedEquilibrium> equilibria;  // profiles of the original game
  // True when `equilibria` contains every extreme equilibrium: always for
  // games that reduce to at most two players with several actions.
  bool complete = false;
  DominanceResult reduction;
};

// Extreme equilibria of any game: strictly dominated actions are removed
// first (they carry zero weight in every equilibrium), players left with a
// single action are fixed, and the remainder is solved exactly when at most
// two players are left; otherwise only pure equilibria are returned and
// `complete` is false.
NashEnumeration EnumerateExtremeNash(const Game& game);

}  // namespace marc

#endif  // MARC_EQUILIBRIUM_H_
