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

#include "marc/game.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "marc/errors.h"

namespace marc {

Game::Game(std::vector<std::vector<std::string>> action_names,
           std::vector<Rational> payoffs)
    : action_names_(std::move(action_names)), payoffs_(std::move(payoffs)) {
  if (action_names_.empty()) throw InputError("game needs at least one player");
  const std::size_t n = action_names_.size();
  counts_.resize(n);
  strides_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& names = action_names_[i];
    if (names.empty()) {
      throw InputError("player " + std::to_string(i + 1) + " has no actions");
    }
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) {
      throw InputError("player " + std::to_string(i + 1) +
                       " has duplicate action names");
    }
    counts_[i] = names.size();
  }
  for (std::size_t i = n; i-- > 0;) {
    strides_[i] = num_profiles_;
    num_profiles_ *= counts_[i];
  }
  if (payoffs_.size() != num_profiles_ * n) {
    throw InputError("payoff tensor has " + std::to_string(payoffs_.size()) +
                     " entries, expected " +
                     std::to_string(num_profiles_ * n));
  }
  zero_sum_ = n == 2;
  for (std::size_t p = 0; zero_sum_ && p < num_profiles_; ++p) {
    zero_sum_ = (payoff(p, 0) + payoff(p, 1)).is_zero();
  }
}

Game Game::FromFunction(
    std::vector<std::vector<std::string>> action_names,
    const std::function<Rational(std::span<const std::size_t>, std::size_t)>&
        payoff) {
  std::size_t profiles = 1;
  for (const auto& names : action_names) profiles *= names.size();
  const std::size_t n = action_names.size();
  std::vector<Rational> tensor;
  tensor.reserve(profiles * n);
  std::vector<std::size_t> actions(n, 0);
  for (std::size_t p = 0; p < profiles; ++p) {
    for (std::size_t i = 0; i < n; ++i) tensor.push_back(payoff(actions, i));
    for (std::size_t i = n; i-- > 0;) {
      if (++actions[i] < action_names[i].size()) break;
      actions[i] = 0;
    }
  }
  return Game(std::move(action_names), std::move(tensor));
}

std::vector<std::vector<std::string>> Game::DefaultActionNames(
    std::span<const std::size_t> action_counts) {
  std::vector<std::vector<std::string>> names;
  for (std::size_t count : action_counts) {
    auto& list = names.emplace_back();
    for (std::size_t a = 0; a < count; ++a) {
      list.push_back("a" + std::to_string(a + 1));
    }
  }
  return names;
}

std::size_t Game::ProfileIndex(std::span<const std::size_t> actions) const {
  if (actions.size() != num_players()) {
    throw InputError("pure profile has wrong number of players");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i] >= counts_[i]) throw InputError("action index out of range");
    index += actions[i] * strides_[i];
  }
  return index;
}

std::vector<std::size_t> Game::ProfileActions(std::size_t index) const {
  std::vector<std::size_t> actions(num_players());
  for (std::size_t i = 0; i < num_players(); ++i) {
    actions[i] = index / strides_[i];
    index %= strides_[i];
  }
  return actions;
}

MixedStrategy::MixedStrategy(std::size_t owner, std::vector<Rational> weights)
    : owner_(owner), weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("mixed strategy over no actions");
  Rational total;
  for (const auto& w : weights_) {
    if (w.sign() < 0) throw InputError("negative probability in strategy");
    total += w;
  }
  if (total != Rational(1)) {
    throw InputError("strategy weights sum to " + total.ToString() +
                     ", not 1");
  }
}

MixedStrategy MixedStrategy::Pure(std::size_t owner, std::size_t action,
                                  std::size_t num_actions) {
  if (action >= num_actions) throw InputError("pure action out of range");
  std::vector<Rational> w(num_actions);
  w[action] = 1;
  return MixedStrategy(owner, std::move(w));
}

MixedStrategy MixedStrategy::Uniform(std::size_t owner,
                                     std::size_t num_actions) {
  return MixedStrategy(
      owner, std::vector<Rational>(
                 num_actions, Rational(1, static_cast<long long>(num_actions))));
}

std::vector<std::size_t> MixedStrategy::Support() const {
  std::vector<std::size_t> support;
  for (std::size_t a = 0; a < weights_.size(); ++a) {
    if (!weights_[a].is_zero()) support.push_back(a);
  }
  return support;
}

std::optional<std::size_t> MixedStrategy::PureAction() const {
  for (std::size_t a = 0; a < weights_.size(); ++a) {
    if (weights_[a] == Rational(1)) return a;
  }
  return std::nullopt;
}

OpponentProfile::OpponentProfile(std::size_t excluded,
                                 std::vector<MixedStrategy> strategies)
    : excluded_(excluded), strategies_(std::move(strategies)) {
  if (excluded_ > strategies_.size()) {
    throw InputError("excluded player out of range");
  }
  for (std::size_t k = 0; k < strategies_.size(); ++k) {
    const std::size_t expected = k < excluded_ ? k : k + 1;
    if (strategies_[k].owner() != expected) {
      throw InputError("opponent strategy owned by player " +
                       std::to_string(strategies_[k].owner() + 1) +
                       " in slot of player " + std::to_string(expected + 1));
    }
  }
}

const MixedStrategy& OpponentProfile::of(std::size_t player) const {
  if (player == excluded_ || player > strategies_.size()) {
    throw InputError("no opponent strategy for player " +
                     std::to_string(player + 1));
  }
  return strategies_[player < excluded_ ? player : player - 1];
}

Profile OpponentProfile::Complete(const MixedStrategy& own) const {
  if (own.owner() != excluded_) {
    throw InputError("completing strategy has the wrong owner");
  }
  std::vector<MixedStrategy> all = strategies_;
  all.insert(all.begin() + static_cast<std::ptrdiff_t>(excluded_), own);
  return Profile(std::move(all));
}

Profile::Profile(std::vector<MixedStrategy> strategies)
    : strategies_(std::move(strategies)) {
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    if (strategies_[i].owner() != i) {
      throw InputError("profile slot " + std::to_string(i + 1) +
                       " holds a strategy of player " +
                       std::to_string(strategies_[i].owner() + 1));
    }
  }
}

Profile Profile::Pure(const Game& game, std::span<const std::size_t> actions) {
  if (actions.size() != game.num_players()) {
    throw InputError("pure profile has wrong number of players");
  }
  std::vector<MixedStrategy> s;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    s.push_back(MixedStrategy::Pure(i, actions[i], game.num_actions(i)));
  }
  return Profile(std::move(s));
}

OpponentProfile Profile::Opponents(std::size_t player) const {
  std::vector<MixedStrategy> others;
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    if (i != player) others.push_back(strategies_[i]);
  }
  return OpponentProfile(player, std::move(others));
}

Profile Profile::With(const MixedStrategy& replacement) const {
  std::vector<MixedStrategy> s = strategies_;
  s.at(replacement.owner()) = replacement;
  return Profile(std::move(s));
}

std::optional<std::vector<std::size_t>> Profile::PureActions() const {
  std::vector<std::size_t> actions;
  for (const auto& s : strategies_) {
    auto a = s.PureAction();
    if (!a) return std::nullopt;
    actions.push_back(*a);
  }
  return actions;
}

bool operator<(const Profile& a, const Profile& b) {
  return std::lexicographical_compare(
      a.strategies_.begin(), a.strategies_.end(), b.strategies_.begin(),
      b.strategies_.end(), [](const MixedStrategy& x, const MixedStrategy& y) {
        return x.weights() < y.weights();
      });
}

ConjectureProfile::ConjectureProfile(std::vector<OpponentProfile> beliefs)
    : beliefs_(std::move(beliefs)) {
  for (std::size_t i = 0; i < beliefs_.size(); ++i) {
    if (beliefs_[i].excluded() != i ||
        beliefs_[i].num_players() != beliefs_.size()) {
      throw InputError("conjecture slot " + std::to_string(i + 1) +
                       " is not a belief of that player");
    }
  }
}

ConjectureProfile ConjectureProfile::CorrectFor(const Profile& actual) {
  std::vector<OpponentProfile> beliefs;
  for (std::size_t i = 0; i < actual.num_players(); ++i) {
    beliefs.push_back(actual.Opponents(i));
  }
  return ConjectureProfile(std::move(beliefs));
}

void CheckProfileShape(const Game& game, const Profile& profile) {
  if (profile.num_players() != game.num_players()) {
    throw InputError("profile has " + std::to_string(profile.num_players()) +
                     " players, game has " +
                     std::to_string(game.num_players()));
  }
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (profile[i].size() != game.num_actions(i)) {
      throw InputError("strategy of player " + std::to_string(i + 1) +
                       " has " + std::to_string(profile[i].size()) +
                       " weights, player has " +
                       std::to_string(game.num_actions(i)) + " actions");
    }
  }
}

void CheckOpponentShape(const Game& game, const OpponentProfile& opponents) {
  if (opponents.num_players() != game.num_players()) {
    throw InputError("opponent profile does not match the game's players");
  }
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (i == opponents.excluded()) continue;
    if (opponents.of(i).size() != game.num_actions(i)) {
      throw InputError("strategy of player " + std::to_string(i + 1) +
                       " does not match its action count");
    }
  }
}

namespace {

// Calls visit(actions, probability) for every pure profile of the players
// other than `skip` with positive probability; actions[skip] is left at 0.
template <typename Visit>
void ForEachSupportedProfile(const Game& game,
                             const std::vector<const MixedStrategy*>& mix,
                             std::size_t skip, Visit&& visit) {
  const std::size_t n = game.num_players();
  std::vector<std::vector<std::size_t>> supports(n);
  for (std::size_t i = 0; i < n; ++i) {
    supports[i] = i == skip ? std::vector<std::size_t>{0} : mix[i]->Support();
  }
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::size_t> actions(n, 0);
  while (true) {
    Rational probability(1);
    for (std::size_t i = 0; i < n; ++i) {
      actions[i] = supports[i][cursor[i]];
      if (i != skip) probability *= (*mix[i])[actions[i]];
    }
    visit(actions, probability);
    std::size_t i = n;
    while (i-- > 0) {
      if (++cursor[i] < supports[i].size()) break;
      cursor[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

Rational ExpectedUtility(const Game& game, const Profile& profile,
                         std::size_t player) {
  CheckProfileShape(game, profile);
  if (player >= game.num_players()) throw InputError("player out of range");
  std::vector<const MixedStrategy*> mix;
  for (const auto& s : profile.strategies()) mix.push_back(&s);
  Rational total;
  ForEachSupportedProfile(
      game, mix, game.num_players(),
      [&](const std::vector<std::size_t>& actions, const Rational& p) {
        const Rational& u = game.payoff(actions, player);
        if (!u.is_zero()) total += p * u;
      });
  return total;
}

std::vector<Rational> ActionValues(const Game& game, std::size_t player,
                                   const OpponentProfile& opponents) {
  CheckOpponentShape(game, opponents);
  if (opponents.excluded() != player) {
    throw InputError("opponent profile excludes the wrong player");
  }
  std::vector<const MixedStrategy*> mix(game.num_players(), nullptr);
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (i != player) mix[i] = &opponents.of(i);
  }
  std::vector<Rational> values(game.num_actions(player));
  ForEachSupportedProfile(
      game, mix, player,
      [&](std::vector<std::size_t> actions, const Rational& p) {
        for (std::size_t a = 0; a < values.size(); ++a) {
          actions[player] = a;
          const Rational& u = game.payoff(actions, player);
          if (!u.is_zero()) values[a] += p * u;
        }
      });
  return values;
}

std::optional<std::size_t> InducedGame::InducedIndex(
    std::size_t original) const {
  for (std::size_t k = 0; k < original_players.size(); ++k) {
    if (original_players[k] == original) return k;
  }
  return std::nullopt;
}

InducedGame Restrict(const Game& game, std::size_t player,
                     const MixedStrategy& commitment) {
  if (player >= game.num_players()) throw InputError("player out of range");
  if (commitment.owner() != player) {
    throw InputError("commitment is not owned by the committing player");
  }
  if (commitment.size() != game.num_actions(player)) {
    throw InputError("commitment does not match the player's action count");
  }
  if (game.num_players() < 2) {
    throw InputError("cannot restrict a one-player game");
  }
  std::vector<std::size_t> original;
  std::vector<std::vector<std::string>> names;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (i == player) continue;
    original.push_back(i);
    names.push_back(game.action_names(i));
  }
  const auto support = commitment.Support();
  Game induced = Game::FromFunction(
      std::move(names),
      [&](std::span<const std::size_t> actions, std::size_t k) {
        std::vector<std::size_t> full(actions.begin(), actions.end());
        full.insert(full.begin() + static_cast<std::ptrdiff_t>(player), 0);
        Rational value;
        for (std::size_t a : support) {
          full[player] = a;
          value += commitment[a] * game.payoff(full, original[k]);
        }
        return value;
      });
  return {std::move(induced), std::move(original)};
}

std::string FormatStrategy(const Game& game, const MixedStrategy& strategy) {
  const auto& names = game.action_names(strategy.owner());
  if (auto a = strategy.PureAction()) return names[*a];
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t a : strategy.Support()) {
    if (!first) os << ", ";
    first = false;
    os << strategy[a] << " " << names[a];
  }
  os << ")";
  return os.str();
}

std::string FormatProfile(const Game& game, const Profile& profile) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < profile.num_players(); ++i) {
    if (i) os << ", ";
    os << FormatStrategy(game, profile[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace marc
