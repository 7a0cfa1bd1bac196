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

#include "marc/equilibrium.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>

#include "linear_system.h"
#include "marc/errors.h"
#include "marc/lp.h"

namespace marc {

bool BestResponseSet::Contains(std::size_t action) const {
  return std::binary_search(pure_maximizers.begin(), pure_maximizers.end(),
                            action);
}

BestResponseSet BestResponse(const Game& game, std::size_t player,
                             const OpponentProfile& opponents) {
  const std::vector<Rational> values = ActionValues(game, player, opponents);
  BestResponseSet out;
  out.player = player;
  out.value = *std::max_element(values.begin(), values.end());
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (values[a] == out.value) out.pure_maximizers.push_back(a);
  }
  return out;
}

bool IsCorrect(const ConjectureProfile& conjectures, const Profile& actual,
               std::size_t player) {
  if (conjectures.num_players() != actual.num_players()) {
    throw InputError("conjectures and profile disagree on player count");
  }
  for (std::size_t j = 0; j < actual.num_players(); ++j) {
    if (j == player) continue;
    if (conjectures.belief(player, j).weights() != actual[j].weights()) {
      return false;
    }
  }
  return true;
}

bool IsRational(const Game& game, std::size_t player,
                const MixedStrategy& chosen,
                const OpponentProfile& conjecture) {
  if (chosen.owner() != player || chosen.size() != game.num_actions(player)) {
    throw InputError("chosen strategy does not belong to the player");
  }
  const BestResponseSet br = BestResponse(game, player, conjecture);
  for (std::size_t a : chosen.Support()) {
    if (!br.Contains(a)) return false;
  }
  return true;
}

bool NashReport::is_nash() const {
  return std::all_of(slack.begin(), slack.end(),
                     [](const Rational& s) { return s.is_zero(); });
}

NashReport CheckNash(const Game& game, const Profile& profile) {
  CheckProfileShape(game, profile);
  NashReport report{profile, {}};
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const BestResponseSet br = BestResponse(game, i, profile.Opponents(i));
    Rational slack = br.value - ExpectedUtility(game, profile, i);
    if (slack.sign() < 0) {
      throw InternalError("negative Nash slack for player " +
                          std::to_string(i + 1));
    }
    report.slack.push_back(std::move(slack));
  }
  return report;
}

std::vector<Profile> EnumeratePureNash(const Game& game) {
  std::vector<Profile> out;
  const std::size_t n = game.num_players();
  for (std::size_t p = 0; p < game.num_profiles(); ++p) {
    std::vector<std::size_t> actions = game.ProfileActions(p);
    bool stable = true;
    for (std::size_t i = 0; stable && i < n; ++i) {
      const Rational& current = game.payoff(p, i);
      const std::size_t own = actions[i];
      for (std::size_t a = 0; a < game.num_actions(i); ++a) {
        actions[i] = a;
        if (game.payoff(actions, i) > current) {
          stable = false;
          break;
        }
      }
      actions[i] = own;
    }
    if (stable) out.push_back(Profile::Pure(game, actions));
  }
  return out;
}

namespace {

// Vertex of {(z, w) : z in simplex, cross[l] . z <= w for every l}, where
// cross[l][k] is the other player's payoff for its action l against own
// action k. Bit k of zero_labels: z_k == 0. Bit l of tight_labels: cross[l]
// . z == w (l is a best response of the other player).
struct PolyVertex {
  std::vector<Rational> z;
  std::uint64_t zero_labels = 0;
  std::uint64_t tight_labels = 0;
};

std::vector<PolyVertex> BestResponseVertices(
    const std::vector<std::vector<Rational>>& cross, std::size_t own_count) {
  const std::size_t other_count = cross.size();
  const std::size_t total = own_count + other_count;
  if (total > 63) throw InputError("game too large for vertex enumeration");
  std::map<std::vector<Rational>, PolyVertex> found;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << total);
       ++subset) {
    if (static_cast<std::size_t>(std::popcount(subset)) != own_count) continue;
    // Unknowns z_0..z_{k-1}, w.
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    m.emplace_back(own_count + 1, Rational(1));
    m.back()[own_count] = 0;
    rhs.emplace_back(1);
    for (std::size_t t = 0; t < total; ++t) {
      if (!(subset >> t & 1)) continue;
      std::vector<Rational> row(own_count + 1);
      if (t < own_count) {
        row[t] = 1;
      } else {
        const auto& c = cross[t - own_count];
        for (std::size_t k = 0; k < own_count; ++k) row[k] = c[k];
        row[own_count] = -1;
      }
      m.push_back(std::move(row));
      rhs.emplace_back(0);
    }
    auto sol = internal::SolveSquare(std::move(m), std::move(rhs));
    if (!sol) continue;
    PolyVertex v;
    v.z.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(own_count));
    const Rational& w = (*sol)[own_count];
    bool feasible = true;
    for (std::size_t k = 0; k < own_count; ++k) {
      if (v.z[k].sign() < 0) feasible = false;
      if (v.z[k].is_zero()) v.zero_labels |= std::uint64_t{1} << k;
    }
    for (std::size_t l = 0; feasible && l < other_count; ++l) {
      Rational value;
      for (std::size_t k = 0; k < own_count; ++k) value += cross[l][k] * v.z[k];
      if (value > w) feasible = false;
      if (value == w) v.tight_labels |= std::uint64_t{1} << l;
    }
    if (feasible) found.emplace(v.z, std::move(v));
  }
  std::vector<PolyVertex> out;
  for (auto& [key, v] : found) out.push_back(std::move(v));
  return out;
}

std::size_t SupportSize(const Profile& p) {
  std::size_t size = 0;
  for (const auto& s : p.strategies()) size += s.Support().size();
  return size;
}

void SortEquilibria(std::vector<MixedEquilibrium>& eqs) {
  std::sort(eqs.begin(), eqs.end(),
            [](const MixedEquilibrium& a, const MixedEquilibrium& b) {
              const std::size_t sa = SupportSize(a.profile);
              const std::size_t sb = SupportSize(b.profile);
              if (sa != sb) return sa < sb;
              return b.profile < a.profile;
            });
}

}  // namespace

std::vector<MixedEquilibrium> EnumerateMixedNash2p(const Game& game) {
  if (game.num_players() != 2) {
    throw InputError(
        "mixed Nash enumeration needs exactly two players; use pure "
        "enumeration for " +
        std::to_string(game.num_players()) + "-player games");
  }
  const std::size_t m = game.num_actions(0);
  const std::size_t n = game.num_actions(1);
  // Row side: the column player's payoffs, indexed [column][row].
  std::vector<std::vector<Rational>> col_payoff(n, std::vector<Rational>(m));
  std::vector<std::vector<Rational>> row_payoff(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t cell[] = {i, j};
      col_payoff[j][i] = game.payoff(cell, 1);
      row_payoff[i][j] = game.payoff(cell, 0);
    }
  }
  const auto xs = BestResponseVertices(col_payoff, m);
  const auto ys = BestResponseVertices(row_payoff, n);
  const std::uint64_t all_rows = (std::uint64_t{1} << m) - 1;
  const std::uint64_t all_cols = (std::uint64_t{1} << n) - 1;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<int> x_degree(xs.size(), 0);
  std::vector<int> y_degree(ys.size(), 0);
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = 0; b < ys.size(); ++b) {
      if ((xs[a].zero_labels | ys[b].tight_labels) == all_rows &&
          (ys[b].zero_labels | xs[a].tight_labels) == all_cols) {
        pairs.emplace_back(a, b);
        ++x_degree[a];
        ++y_degree[b];
      }
    }
  }
  std::vector<MixedEquilibrium> out;
  for (const auto& [a, b] : pairs) {
    Profile p({MixedStrategy(0, xs[a].z), MixedStrategy(1, ys[b].z)});
    out.push_back({std::move(p), x_degree[a] > 1 || y_degree[b] > 1});
  }
  SortEquilibria(out);
  return out;
}

std::optional<MixedStrategy> FindStrictDominator(const Game& game,
                                                 std::size_t player,
                                                 std::size_t action) {
  const std::size_t k = game.num_actions(player);
  if (action >= k) throw InputError("action out of range");
  if (k == 1) return std::nullopt;
  // Variables: sigma over all k actions (sigma[action] pinned to 0), epsilon.
  LinearProgram lp;
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[k] = 1;
  lp.bounds.assign(k + 1, VariableBounds::NonNegative());
  lp.bounds[action].upper = Rational(0);
  lp.bounds[k] = VariableBounds::Free();
  std::vector<Rational> simplex(k + 1, Rational(1));
  simplex[k] = 0;
  lp.AddConstraint(std::move(simplex), Relation::kEqual, Rational(1));
  for (std::size_t p = 0; p < game.num_profiles(); ++p) {
    std::vector<std::size_t> actions = game.ProfileActions(p);
    if (actions[player] != 0) continue;  // one row per opponent profile
    std::vector<Rational> row(k + 1);
    for (std::size_t a = 0; a < k; ++a) {
      actions[player] = a;
      row[a] = game.payoff(actions, player);
    }
    actions[player] = action;
    row[k] = -1;
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual,
                     game.payoff(actions, player));
  }
  const LpOutcome result = SolveLp(lp);
  if (!result.optimal() || result.value.sign() <= 0) return std::nullopt;
  std::vector<Rational> weights(result.point.begin(), result.point.end() - 1);
  return MixedStrategy(player, std::move(weights));
}

namespace {

Game SubGame(const Game& game,
             const std::vector<std::vector<std::size_t>>& keep) {
  std::vector<std::vector<std::string>> names;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    auto& list = names.emplace_back();
    for (std::size_t a : keep[i]) list.push_back(game.action_names(i)[a]);
  }
  return Game::FromFunction(
      std::move(names),
      [&](std::span<const std::size_t> actions, std::size_t player) {
        std::vector<std::size_t> full(actions.size());
        for (std::size_t i = 0; i < actions.size(); ++i) {
          full[i] = keep[i][actions[i]];
        }
        return game.payoff(full, player);
      });
}

MixedStrategy Embed(const MixedStrategy& s, const std::vector<std::size_t>& map,
                    std::size_t size) {
  std::vector<Rational> w(size);
  for (std::size_t k = 0; k < s.size(); ++k) w[map[k]] = s[k];
  return MixedStrategy(s.owner(), std::move(w));
}

}  // namespace

Profile DominanceResult::Lift(const Profile& reduced_profile) const {
  std::vector<MixedStrategy> out;
  for (std::size_t i = 0; i < reduced_profile.num_players(); ++i) {
    out.push_back(Embed(reduced_profile[i], surviving[i], original_counts[i]));
  }
  return Profile(std::move(out));
}

DominanceResult IteratedStrictDominance(const Game& game) {
  return IteratedStrictDominance(game,
                                 std::vector<bool>(game.num_players(), true));
}

DominanceResult IteratedStrictDominance(const Game& game,
                                        const std::vector<bool>& eligible) {
  if (eligible.size() != game.num_players()) {
    throw InputError("eligibility mask does not match player count");
  }
  std::vector<std::vector<std::size_t>> keep(game.num_players());
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    for (std::size_t a = 0; a < game.num_actions(i); ++a) keep[i].push_back(a);
  }
  DominanceResult result{game, keep, {}, game.action_counts()};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; !changed && i < game.num_players(); ++i) {
      if (!eligible[i]) continue;
      for (std::size_t a = 0; !changed && a < result.reduced.num_actions(i);
           ++a) {
        auto dominator = FindStrictDominator(result.reduced, i, a);
        if (!dominator) continue;
        result.trace.push_back(
            {i, keep[i][a], Embed(*dominator, keep[i], game.num_actions(i))});
        keep[i].erase(keep[i].begin() + static_cast<std::ptrdiff_t>(a));
        result.reduced = SubGame(game, keep);
        changed = true;
      }
    }
  }
  result.surviving = keep;
  return result;
}

NashEnumeration EnumerateExtremeNash(const Game& game) {
  NashEnumeration out{{}, true, IteratedStrictDominance(game)};
  const Game& reduced = out.reduction.reduced;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < reduced.num_players(); ++i) {
    if (reduced.num_actions(i) > 1) active.push_back(i);
  }

  auto lift_from_active = [&](const Profile& sub) {
    std::vector<MixedStrategy> s;
    for (std::size_t i = 0; i < reduced.num_players(); ++i) {
      auto it = std::find(active.begin(), active.end(), i);
      if (it == active.end()) {
        s.push_back(MixedStrategy::Pure(i, 0, 1));
      } else {
        s.push_back(sub[static_cast<std::size_t>(it - active.begin())]
                        .WithOwner(i));
      }
    }
    return out.reduction.Lift(Profile(std::move(s)));
  };

  if (active.size() > 2) {
    out.complete = false;
    for (const Profile& p : EnumeratePureNash(reduced)) {
      out.equilibria.push_back({out.reduction.Lift(p), false});
    }
    return out;
  }

  std::vector<std::vector<std::string>> names;
  for (std::size_t i : active) names.push_back(reduced.action_names(i));
  if (active.empty()) {
    out.equilibria.push_back({lift_from_active(Profile(std::vector<MixedStrategy>{})), false});
    return out;
  }
  Game sub = Game::FromFunction(
      std::move(names),
      [&](std::span<const std::size_t> actions, std::size_t k) {
        std::vector<std::size_t> full(reduced.num_players(), 0);
        for (std::size_t t = 0; t < active.size(); ++t) {
          full[active[t]] = actions[t];
        }
        return reduced.payoff(full, active[k]);
      });
  if (active.size() == 1) {
    // Survivors of strict dominance in a decision problem are all optimal.
    const BestResponseSet br = BestResponse(sub, 0, OpponentProfile(0, {}));
    const bool degenerate = br.pure_maximizers.size() > 1;
    for (std::size_t a : br.pure_maximizers) {
      out.equilibria.push_back(
          {lift_from_active(
               Profile({MixedStrategy::Pure(0, a, sub.num_actions(0))})),
           degenerate});
    }
    return out;
  }
  for (auto& eq : EnumerateMixedNash2p(sub)) {
    out.equilibria.push_back({lift_from_active(eq.profile), eq.degenerate});
  }
  return out;
}

}  // namespace marc
