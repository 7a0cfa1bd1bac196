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

#ifndef MARC_COMMITMENT_H_
#define MARC_COMMITMENT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "marc/equilibrium.h"
#include "marc/game.h"
#include "marc/rational.h"

namespace marc {

// Maximin strategy of a two-player zero-sum game.
struct MaximinSolution {
  std::size_t player = 0;
  MixedStrategy strategy;
  Rational value;
  // Optimal strategy of the opponent. Certifies that no strategy of `player`
  // guarantees more: every strategy earns at most `value` against it.
  MixedStrategy opponent_guard;
};

// Solves the value LP. Throws InputError unless the game is zero-sum.
MaximinSolution Maximin(const Game& game, std::size_t player);

// How the committing player evaluates ties among the opponents' responses.
enum class TieBreak { kOptimistic, kPessimistic };
enum class CommitmentSpace { kPure, kMixed };

const char* TieBreakName(TieBreak mode);
const char* CommitmentSpaceName(CommitmentSpace space);

struct CommitmentWitness {
  MixedStrategy commitment;
  // A Nash equilibrium of the game induced by `commitment`, selected by the
  // tie-break rule.
  OpponentProfile response;
  Rational value;
};

struct CommitmentSolution {
  std::size_t player = 0;
  TieBreak mode = TieBreak::kOptimistic;
  CommitmentSpace space = CommitmentSpace::kMixed;
  Rational value;
  // False when `value` is a supremum no commitment reaches.
  bool attained = true;
  // False when `value` is only a lower bound on the optimum over `space`
  // (opponent equilibria or commitments could not be searched exhaustively).
  bool exact = true;
  std::optional<Rational> best_attained;
  std::vector<CommitmentWitness> witnesses;
  std::vector<std::string> notes;
};

// Best payoff `player` can secure by committing to a strategy that the other
// players anticipate correctly, they in turn playing a Nash equilibrium of
// the induced game. Two-player mixed commitments are solved exactly by one
// LP per follower action (optimistic) or per best-response cell
// (pessimistic). Larger games are reduced by removing opponents' strictly
// dominated actions; if more than one opponent keeps a choice, commitments
// fall back to pure ones and the result is marked inexact.
CommitmentSolution CommitmentOptimal(const Game& game, std::size_t player,
                                     TieBreak mode, CommitmentSpace space);

struct CommitmentEvaluation {
  Rational value;
  OpponentProfile response;
  // False when the induced game's equilibria could not all be enumerated.
  bool complete = true;
};

// Payoff of a fixed commitment: the best (optimistic) or worst (pessimistic)
// Nash equilibrium of the induced game for `player`. nullopt when no induced
// equilibrium could be found.
std::optional<CommitmentEvaluation> EvaluateCommitment(
    const Game& game, std::size_t player, const MixedStrategy& commitment,
    TieBreak mode);

enum class Verdict { kHolds, kFails, kUnknown };

const char* VerdictName(Verdict verdict);

struct NashPayoffRow {
  Profile profile;
  std::vector<Rational> payoffs;
  bool degenerate = false;
  // First player whose payoff misses its commitment value; nullopt only on a
  // matching row.
  std::optional<std::size_t> mismatch_player;
  std::string mismatch_reason;
};

struct MarcVerdict {
  Verdict status = Verdict::kUnknown;
  CommitmentSpace space = CommitmentSpace::kMixed;

  std::optional<Profile> witness;
  std::optional<ConjectureProfile> conjectures;

  // Optimistic commitment values V_i and whether each is exact.
  std::vector<Rational> values;
  std::vector<bool> values_exact;

  // Pessimistic tie-breaking, reported for sensitivity.
  std::vector<Rational> pessimistic_values;
  std::vector<bool> pessimistic_attained;
  Verdict pessimistic_status = Verdict::kUnknown;
  bool tie_break_sensitive = false;

  std::vector<NashPayoffRow> nash_table;
  bool nash_complete = false;
  std::vector<Elimination> reduction_trace;

  std::string reason;
};

// Decides whether all players can be simultaneously rational, correct, and
// optimal commitment makers: Holds iff some Nash profile s has
// u_i(s) == V_i for every player i (with pure s when space is kPure).
MarcVerdict MarcCheck(const Game& game,
                      CommitmentSpace space = CommitmentSpace::kMixed);

struct PlayerConditions {
  bool correct = false;
  bool rational = false;
  // The actual strategy solves the commitment problem (its anticipated value
  // equals V_i). nullopt when that could not be decided exactly.
  std::optional<bool> commitment_optimal;
  // u_i(actual) == V_i and actual_{-i} is a Nash equilibrium of the game
  // induced by actual_i.
  bool realized_optimum = false;
  Rational commitment_value;  // V_i
  std::optional<Rational> actual_commitment_value;

  bool AllHold() const {
    return correct && rational && commitment_optimal.value_or(false);
  }
};

std::vector<PlayerConditions> CheckMarcConditions(
    const Game& game, const Profile& actual,
    const ConjectureProfile& conjectures,
    CommitmentSpace space = CommitmentSpace::kMixed);

}  // namespace marc

#endif  // MARC_COMMITMENT_H_
