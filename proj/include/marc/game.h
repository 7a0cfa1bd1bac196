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

#ifndef MARC_GAME_H_
#define MARC_GAME_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "marc/rational.h"

namespace marc {

// Finite normal-form game with exact payoffs. The payoff tensor is dense and
// row-major over pure action profiles with player 0 slowest; entry
// (profile, player) lives at index profile * num_players + player.
//
// Games with a single player are permitted: they arise when one player of a
// two-player game commits and the other is left with a decision problem.
class Game {
 public:
  // `payoffs` holds num_profiles() * num_players() entries in the layout
  // above. Throws InputError on empty action sets, duplicate action names, or
  // a payoff vector of the wrong length.
  Game(std::vector<std::vector<std::string>> action_names,
       std::vector<Rational> payoffs);

  // Builds the tensor by evaluating `payoff(actions, player)` at every cell.
  static Game FromFunction(
      std::vector<std::vector<std::string>> action_names,
      const std::function<Rational(std::span<const std::size_t>, std::size_t)>&
          payoff);

  // Actions named a1..ak for each player.
  static std::vector<std::vector<std::string>> DefaultActionNames(
      std::span<const std::size_t> action_counts);

  std::size_t num_players() const { return action_names_.size(); }
  std::size_t num_actions(std::size_t player) const {
    return action_names_[player].size();
  }
  const std::vector<std::size_t>& action_counts() const { return counts_; }
  const std::vector<std::string>& action_names(std::size_t player) const {
    return action_names_[player];
  }
  const std::vector<std::vector<std::string>>& all_action_names() const {
    return action_names_;
  }
  std::size_t num_profiles() const { return num_profiles_; }

  std::size_t ProfileIndex(std::span<const std::size_t> actions) const;
  std::vector<std::size_t> ProfileActions(std::size_t index) const;

  const Rational& payoff(std::size_t profile_index, std::size_t player) const {
    return payoffs_[profile_index * num_players() + player];
  }
  const Rational& payoff(std::span<const std::size_t> actions,
                         std::size_t player) const {
    return payoff(ProfileIndex(actions), player);
  }
  const std::vector<Rational>& payoff_tensor() const { return payoffs_; }

  // True iff two players and u_0 + u_1 == 0 at every pure profile.
  bool is_zero_sum() const { return zero_sum_; }

  friend bool operator==(const Game& a, const Game& b) {
    return a.action_names_ == b.action_names_ && a.payoffs_ == b.payoffs_;
  }

 private:
  std::vector<std::vector<std::string>> action_names_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 1;
  std::vector<Rational> payoffs_;
  bool zero_sum_ = false;
};

inline bool IsZeroSum(const Game& game) { return game.is_zero_sum(); }

// A probability vector over one player's actions. Weights are nonnegative and
// sum to exactly one.
class MixedStrategy {
 public:
  // Throws InputError when the weights do not form a distribution.
  MixedStrategy(std::size_t owner, std::vector<Rational> weights);

  static MixedStrategy Pure(std::size_t owner, std::size_t action,
                            std::size_t num_actions);
  static MixedStrategy Uniform(std::size_t owner, std::size_t num_actions);

  std::size_t owner() const { return owner_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& operator[](std::size_t action) const {
    return weights_[action];
  }

  std::vector<std::size_t> Support() const;
  std::optional<std::size_t> PureAction() const;

  MixedStrategy WithOwner(std::size_t owner) const {
    MixedStrategy copy = *this;
    copy.owner_ = owner;
    return copy;
  }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::size_t owner_;
  std::vector<Rational> weights_;
};

class Profile;

// Strategies of every player except `excluded`, in increasing player order.
// Used both for t_{-i} and for conjectures c^i_{-i}.
class OpponentProfile {
 public:
  OpponentProfile(std::size_t excluded, std::vector<MixedStrategy> strategies);

  std::size_t excluded() const { return excluded_; }
  std::size_t num_players() const { return strategies_.size() + 1; }
  const std::vector<MixedStrategy>& strategies() const { return strategies_; }

  // Strategy of player `player` (must differ from excluded()).
  const MixedStrategy& of(std::size_t player) const;

  Profile Complete(const MixedStrategy& own) const;

  friend bool operator==(const OpponentProfile&,
                         const OpponentProfile&) = default;

 private:
  std::size_t excluded_;
  std::vector<MixedStrategy> strategies_;
};

// One mixed strategy per player; strategies[i].owner() == i.
class Profile {
 public:
  explicit Profile(std::vector<MixedStrategy> strategies);

  static Profile Pure(const Game& game, std::span<const std::size_t> actions);

  std::size_t num_players() const { return strategies_.size(); }
  const MixedStrategy& operator[](std::size_t player) const {
    return strategies_[player];
  }
  const std::vector<MixedStrategy>& strategies() const { return strategies_; }

  OpponentProfile Opponents(std::size_t player) const;
  Profile With(const MixedStrategy& replacement) const;

  // The pure action profile when every strategy is a point mass.
  std::optional<std::vector<std::size_t>> PureActions() const;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend bool operator<(const Profile& a, const Profile& b);

 private:
  std::vector<MixedStrategy> strategies_;
};

// c^i_j for every ordered pair i != j, stored as beliefs[i] over the
// opponents of i.
class ConjectureProfile {
 public:
  explicit ConjectureProfile(std::vector<OpponentProfile> beliefs);

  // The unique correct conjectures for `actual`: c^i_{-i} = actual_{-i}.
  static ConjectureProfile CorrectFor(const Profile& actual);

  std::size_t num_players() const { return beliefs_.size(); }
  const OpponentProfile& of(std::size_t player) const {
    return beliefs_[player];
  }
  const MixedStrategy& belief(std::size_t holder, std::size_t about) const {
    return beliefs_[holder].of(about);
  }

 private:
  std::vector<OpponentProfile> beliefs_;
};

// Expected payoff of `player` under a full mixed profile. Throws InputError on
// dimension mismatch.
Rational ExpectedUtility(const Game& game, const Profile& profile,
                         std::size_t player);

// Expected payoff of `player` for each of its own pure actions against
// `opponents`.
std::vector<Rational> ActionValues(const Game& game, std::size_t player,
                                   const OpponentProfile& opponents);

// The game left to the other players once `player` commits to `commitment`.
// original_players[k] is the index in the parent game of induced player k.
struct InducedGame {
  Game game;
  std::vector<std::size_t> original_players;

  // Inverse of original_players, or nullopt for the committed player.
  std::optional<std::size_t> InducedIndex(std::size_t original) const;
};

InducedGame Restrict(const Game& game, std::size_t player,
                     const MixedStrategy& commitment);

// Throws InputError unless the profile matches the game's shape.
void CheckProfileShape(const Game& game, const Profile& profile);
void CheckOpponentShape(const Game& game, const OpponentProfile& opponents);

std::string FormatStrategy(const Game& game, const MixedStrategy& strategy);
std::string FormatProfile(const Game& game, const Profile& profile);

}  // namespace marc

#endif  // MARC_GAME_H_
