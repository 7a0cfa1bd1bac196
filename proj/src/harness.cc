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

#include "marc/harness.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "marc/catalog.h"
#include "marc/commitment.h"
#include "marc/equilibrium.h"
#include "marc/errors.h"
#include "marc/lp.h"

namespace marc {

namespace {
constexpr std::uint64_t kSeedMix = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kMultiplier = 0x2545F4914F6CDD1DULL;
}  // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(seed ^ kSeedMix) {
  if (state_ == 0) state_ = kSeedMix;
}

std::uint64_t Xorshift64Star::Next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * kMultiplier;
}

std::int64_t Xorshift64Star::Uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("empty range for uniform draw");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(Next() % span);
}

const char* GameClassName(GameClass c) {
  switch (c) {
    case GameClass::kGeneral:
      return "general";
    case GameClass::kZeroSum:
      return "zero_sum";
    case GameClass::kStrictlyDominant:
      return "strictly_dominant";
  }
  return "general";
}

namespace {

void CheckSpec(const GeneratorSpec& spec) {
  if (spec.min_players < 1 || spec.min_players > spec.max_players ||
      spec.min_actions < 1 || spec.min_actions > spec.max_actions ||
      spec.payoff_lo > spec.payoff_hi) {
    throw InputError("generator spec has an empty range");
  }
}

Game DrawGame(const GeneratorSpec& spec, Xorshift64Star& rng) {
  std::size_t n = static_cast<std::size_t>(
      rng.Uniform(static_cast<std::int64_t>(spec.min_players),
                  static_cast<std::int64_t>(spec.max_players)));
  if (spec.game_class == GameClass::kZeroSum) n = 2;
  std::vector<std::size_t> counts(n);
  for (auto& c : counts) {
    c = static_cast<std::size_t>(
        rng.Uniform(static_cast<std::int64_t>(spec.min_actions),
                    static_cast<std::int64_t>(spec.max_actions)));
  }
  std::size_t profiles = 1;
  for (std::size_t c : counts) profiles *= c;
  std::vector<std::int64_t> tensor(profiles * n);
  for (std::size_t p = 0; p < profiles; ++p) {
    if (spec.game_class == GameClass::kZeroSum) {
      const std::int64_t u = rng.Uniform(spec.payoff_lo, spec.payoff_hi);
      tensor[p * n] = u;
      tensor[p * n + 1] = -u;
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        tensor[p * n + i] = rng.Uniform(spec.payoff_lo, spec.payoff_hi);
      }
    }
  }
  Game shape(Game::DefaultActionNames(counts),
             std::vector<Rational>(profiles * n));
  if (spec.game_class == GameClass::kStrictlyDominant) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto dominant = static_cast<std::size_t>(
          rng.Uniform(0, static_cast<std::int64_t>(counts[i]) - 1));
      if (counts[i] == 1) continue;
      for (std::size_t p = 0; p < profiles; ++p) {
        std::vector<std::size_t> actions = shape.ProfileActions(p);
        if (actions[i] != dominant) continue;
        std::int64_t best = 0;
        bool first = true;
        for (std::size_t a = 0; a < counts[i]; ++a) {
          if (a == dominant) continue;
          actions[i] = a;
          const std::int64_t v = tensor[shape.ProfileIndex(actions) * n + i];
          if (first || v > best) best = v;
          first = false;
        }
        tensor[p * n + i] = best + 1;
      }
    }
  }
  std::vector<Rational> payoffs;
  payoffs.reserve(tensor.size());
  for (std::int64_t v : tensor) payoffs.emplace_back(static_cast<long long>(v));
  return Game(Game::DefaultActionNames(counts), std::move(payoffs));
}

}  // namespace

std::vector<Game> Generate(const GeneratorSpec& spec, std::size_t count) {
  CheckSpec(spec);
  Xorshift64Star rng(spec.seed);
  std::vector<Game> games;
  games.reserve(count);
  for (std::size_t k = 0; k < count; ++k) games.push_back(DrawGame(spec, rng));
  return games;
}

namespace {

// Random distribution with small integer weights; never all zero.
MixedStrategy RandomStrategy(std::size_t owner, std::size_t size,
                             Xorshift64Star& rng) {
  std::vector<long long> raw(size);
  long long total = 0;
  for (auto& w : raw) {
    w = rng.Uniform(0, 3);
    total += w;
  }
  if (total == 0) {
    raw[static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(size) - 1))] = 1;
    total = 1;
  }
  std::vector<Rational> weights;
  for (long long w : raw) weights.emplace_back(w, total);
  return MixedStrategy(owner, std::move(weights));
}

Profile RandomProfile(const Game& game, Xorshift64Star& rng, bool pure) {
  std::vector<MixedStrategy> s;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (pure) {
      s.push_back(MixedStrategy::Pure(
          i,
          static_cast<std::size_t>(rng.Uniform(
              0, static_cast<std::int64_t>(game.num_actions(i)) - 1)),
          game.num_actions(i)));
    } else {
      s.push_back(RandomStrategy(i, game.num_actions(i), rng));
    }
  }
  return Profile(std::move(s));
}

bool HasPureSaddle(const Game& game) { return !EnumeratePureNash(game).empty(); }

std::string Join(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].ToString();
  }
  return s + ")";
}

using Trial = std::function<TrialResult(const Game&, std::size_t)>;

SuiteReport RunOverGames(const std::string& name, const GeneratorSpec& spec,
                         std::size_t count, std::string nontrivial_meaning,
                         const Trial& trial) {
  SuiteReport report;
  report.name = name;
  report.spec = spec;
  report.count = count;
  report.nontrivial_meaning = std::move(nontrivial_meaning);
  const std::vector<Game> games = Generate(spec, count);
  for (std::size_t k = 0; k < games.size(); ++k) {
    TrialResult r;
    try {
      r = trial(games[k], k);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.index = k;
    report.trials.push_back(std::move(r));
  }
  for (const auto& t : report.trials) {
    (t.passed ? report.passed : report.failed)++;
    if (t.nontrivial) ++report.nontrivial;
  }
  return report;
}

TrialResult ZeroSumMarcTrial(const Game& game) {
  TrialResult r;
  r.nontrivial = !HasPureSaddle(game);
  const MarcVerdict v = MarcCheck(game);
  if (v.status != Verdict::kHolds || !v.witness || !v.conjectures) {
    r.detail = std::string("verdict ") + VerdictName(v.status) + ": " +
               v.reason;
    return r;
  }
  const NashReport nash = CheckNash(game, *v.witness);
  if (!nash.is_nash()) {
    r.detail = "witness has Nash slack " + Join(nash.slack);
    return r;
  }
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (!IsCorrect(*v.conjectures, *v.witness, i)) {
      r.detail = "conjecture of player " + std::to_string(i + 1) +
                 " is not correct";
      return r;
    }
  }
  const auto conditions =
      CheckMarcConditions(game, *v.witness, *v.conjectures);
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    if (!conditions[i].AllHold() || !conditions[i].realized_optimum) {
      r.detail = "condition check failed for player " + std::to_string(i + 1);
      return r;
    }
  }
  r.passed = true;
  r.detail = "holds at " + FormatProfile(game, *v.witness) + ", V = " +
             Join(v.values);
  return r;
}

TrialResult MinimaxDualityTrial(const Game& game) {
  TrialResult r;
  r.nontrivial = !HasPureSaddle(game);
  const MaximinSolution row = Maximin(game, 0);
  const MaximinSolution col = Maximin(game, 1);
  r.passed = row.value == -col.value;
  r.detail = "maximin values " + row.value.ToString() + " and " +
             col.value.ToString();
  return r;
}

TrialResult ZeroSumReductionTrial(const Game& game) {
  TrialResult r;
  r.nontrivial = !HasPureSaddle(game);
  r.passed = true;
  std::ostringstream detail;
  for (std::size_t i = 0; i < 2; ++i) {
    const Rational maximin = Maximin(game, i).value;
    const Rational other = Maximin(game, 1 - i).value;
    const CommitmentSolution opt = CommitmentOptimal(
        game, i, TieBreak::kOptimistic, CommitmentSpace::kMixed);
    const CommitmentSolution pess = CommitmentOptimal(
        game, i, TieBreak::kPessimistic, CommitmentSpace::kMixed);
    const bool ok = opt.value == maximin && pess.value == maximin &&
                    pess.attained && maximin == -other;
    if (!ok) r.passed = false;
    detail << "player " << i + 1 << ": optimistic " << opt.value
           << ", pessimistic " << pess.value << ", maximin " << maximin
           << "; ";
  }
  r.detail = detail.str();
  return r;
}

// Checks (every player rational given correct conjectures) <=> (zero Nash
// slack) at one profile. Returns whether the two sides agree; `lhs` gets the
// rational-and-correct side.
bool BiconditionalHolds(const Game& game, const Profile& p, bool* lhs) {
  const ConjectureProfile correct = ConjectureProfile::CorrectFor(p);
  bool all = true;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    all = all && IsCorrect(correct, p, i) &&
          IsRational(game, i, p[i], correct.of(i));
  }
  *lhs = all;
  return all == CheckNash(game, p).is_nash();
}

TrialResult BiconditionalTrial(const Game& game, std::size_t index,
                         std::uint64_t seed) {
  TrialResult r;
  Xorshift64Star rng(seed + 7919 * (index + 1));
  std::vector<std::pair<Game, Profile>> cases;
  cases.emplace_back(game, RandomProfile(game, rng, false));
  cases.emplace_back(game, RandomProfile(game, rng, true));
  // A Nash profile of this game, or of a copy made to have one.
  if (game.num_players() == 2) {
    const auto eqs = EnumerateMixedNash2p(game);
    const auto pick = static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(eqs.size()) - 1));
    cases.emplace_back(game, eqs[pick].profile);
  } else if (auto pure = EnumeratePureNash(game); !pure.empty()) {
    const auto pick = static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(pure.size()) - 1));
    cases.emplace_back(game, pure[pick]);
  } else {
    const Profile target = RandomProfile(game, rng, true);
    const std::vector<std::size_t> a = *target.PureActions();
    std::vector<Rational> tensor = game.payoff_tensor();
    const std::size_t n = game.num_players();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> dev = a;
      Rational best = game.payoff(a, i);
      for (std::size_t k = 0; k < game.num_actions(i); ++k) {
        dev[i] = k;
        best = std::max(best, game.payoff(dev, i));
      }
      tensor[game.ProfileIndex(a) * n + i] = best + Rational(1);
    }
    cases.emplace_back(Game(game.all_action_names(), std::move(tensor)),
                       target);
  }
  r.passed = true;
  std::size_t nash_cases = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    bool lhs = false;
    if (!BiconditionalHolds(cases[c].first, cases[c].second, &lhs)) {
      r.passed = false;
      r.detail = "biconditional broken at " +
                 FormatProfile(cases[c].first, cases[c].second);
      return r;
    }
    if (c == 2 && !lhs) {
      r.passed = false;
      r.detail = "constructed Nash profile is not rational-and-correct";
      return r;
    }
    if (lhs) ++nash_cases;
  }
  r.nontrivial = nash_cases > 0 && nash_cases < cases.size();
  r.detail = std::to_string(cases.size()) + " profiles, " +
             std::to_string(nash_cases) + " rational-and-correct";
  return r;
}

TrialResult ModeOrderingTrial(const Game& game) {
  TrialResult r;
  r.passed = true;
  std::ostringstream detail;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const auto solve = [&](TieBreak mode, CommitmentSpace space) {
      return CommitmentOptimal(game, i, mode, space).value;
    };
    const Rational om = solve(TieBreak::kOptimistic, CommitmentSpace::kMixed);
    const Rational pm = solve(TieBreak::kPessimistic, CommitmentSpace::kMixed);
    const Rational op = solve(TieBreak::kOptimistic, CommitmentSpace::kPure);
    const Rational pp = solve(TieBreak::kPessimistic, CommitmentSpace::kPure);
    if (!(om >= pm && op >= pp && op <= om && pp <= pm)) r.passed = false;
    if (om != pm || om != op) r.nontrivial = true;
    detail << "player " << i + 1 << ": mixed " << om << "/" << pm << ", pure "
           << op << "/" << pp << "; ";
  }
  r.detail = detail.str();
  return r;
}

// Grid of all distributions over `size` actions with weights in multiples of
// 1/steps.
std::vector<std::vector<Rational>> SimplexGrid(std::size_t size,
                                               long long steps) {
  std::vector<std::vector<Rational>> out;
  std::vector<long long> counts(size, 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t k,
                                                        long long left) {
    if (k + 1 == size) {
      counts[k] = left;
      std::vector<Rational> w;
      for (long long c : counts) w.emplace_back(c, steps);
      out.push_back(std::move(w));
      return;
    }
    for (long long c = 0; c <= left; ++c) {
      counts[k] = c;
      rec(k + 1, left - c);
    }
  };
  rec(0, steps);
  return out;
}

bool InConvexHull(const std::vector<Rational>& point,
                  const std::vector<std::vector<Rational>>& vertices) {
  if (vertices.empty()) return false;
  LinearProgram lp;
  lp.objective.assign(vertices.size(), Rational(0));
  lp.AddConstraint(std::vector<Rational>(vertices.size(), Rational(1)),
                   Relation::kEqual, Rational(1));
  for (std::size_t d = 0; d < point.size(); ++d) {
    std::vector<Rational> row;
    for (const auto& v : vertices) row.push_back(v[d]);
    lp.AddConstraint(std::move(row), Relation::kEqual, point[d]);
  }
  return SolveLp(lp).optimal();
}

std::uint64_t Mask(const std::vector<Rational>& w) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!w[k].is_zero()) m |= std::uint64_t{1} << k;
  }
  return m;
}

std::uint64_t BestMask(const std::vector<Rational>& values) {
  const Rational best = *std::max_element(values.begin(), values.end());
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == best) m |= std::uint64_t{1} << k;
  }
  return m;
}

TrialResult NashOracleTrial(const Game& game) {
  constexpr long long kSteps = 50;
  constexpr std::size_t kCheckCap = 200000;
  TrialResult r;
  const auto eqs = EnumerateMixedNash2p(game);
  for (const auto& eq : eqs) {
    if (!CheckNash(game, eq.profile).is_nash()) {
      r.detail = "enumerated profile " + FormatProfile(game, eq.profile) +
                 " has positive slack";
      return r;
    }
    if (!eq.profile.PureActions() || eq.degenerate) r.nontrivial = true;
  }

  // Grid points grouped by (support, opponent best-response set).
  struct Point {
    std::vector<Rational> w;
    std::uint64_t support;
    std::uint64_t induced_best;
  };
  std::vector<Point> rows, cols;
  for (auto& w : SimplexGrid(game.num_actions(0), kSteps)) {
    const MixedStrategy x(0, w);
    const auto values = ActionValues(game, 1, OpponentProfile(1, {x}));
    rows.push_back({w, Mask(w), BestMask(values)});
  }
  for (auto& w : SimplexGrid(game.num_actions(1), kSteps)) {
    const MixedStrategy y(1, w);
    const auto values = ActionValues(game, 0, OpponentProfile(0, {y}));
    cols.push_back({w, Mask(w), BestMask(values)});
  }
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::size_t>>
      row_groups, col_groups;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    row_groups[{rows[k].support, rows[k].induced_best}].push_back(k);
  }
  for (std::size_t k = 0; k < cols.size(); ++k) {
    col_groups[{cols[k].support, cols[k].induced_best}].push_back(k);
  }

  std::vector<std::vector<Rational>> ext_x, ext_y;
  for (const auto& eq : eqs) {
    ext_x.push_back(eq.profile[0].weights());
    ext_y.push_back(eq.profile[1].weights());
  }
  std::size_t grid_nash = 0;
  std::size_t checked = 0;
  for (const auto& [rkey, rmembers] : row_groups) {
    for (const auto& [ckey, cmembers] : col_groups) {
      // x supported on best responses to y, and y on best responses to x.
      if ((rkey.first & ~ckey.second) != 0) continue;
      if ((ckey.first & ~rkey.second) != 0) continue;
      for (std::size_t a : rmembers) {
        for (std::size_t b : cmembers) {
          ++grid_nash;
          if (checked++ >= kCheckCap) continue;
          const Profile p({MixedStrategy(0, rows[a].w),
                           MixedStrategy(1, cols[b].w)});
          if (!CheckNash(game, p).is_nash()) {
            r.detail = "grid filter disagrees with CheckNash at " +
                       FormatProfile(game, p);
            return r;
          }
        }
      }
      // Extreme strategies compatible with this group form the face that
      // must contain every grid equilibrium of the group.
      std::vector<std::vector<Rational>> face_x, face_y;
      for (std::size_t e = 0; e < eqs.size(); ++e) {
        const auto xs = Mask(ext_x[e]);
        const auto xbest = BestMask(
            ActionValues(game, 1, OpponentProfile(1, {eqs[e].profile[0]})));
        const auto ys = Mask(ext_y[e]);
        const auto ybest = BestMask(
            ActionValues(game, 0, OpponentProfile(0, {eqs[e].profile[1]})));
        if ((xs & ~ckey.second) == 0 && (ckey.first & ~xbest) == 0) {
          face_x.push_back(ext_x[e]);
        }
        if ((ys & ~rkey.second) == 0 && (rkey.first & ~ybest) == 0) {
          face_y.push_back(ext_y[e]);
        }
      }
      for (std::size_t a : rmembers) {
        if (!InConvexHull(rows[a].w, face_x)) {
          r.detail = "grid equilibrium row strategy " +
                     FormatStrategy(game, MixedStrategy(0, rows[a].w)) +
                     " lies outside every enumerated face";
          return r;
        }
      }
      for (std::size_t b : cmembers) {
        if (!InConvexHull(cols[b].w, face_y)) {
          r.detail = "grid equilibrium column strategy " +
                     FormatStrategy(game, MixedStrategy(1, cols[b].w)) +
                     " lies outside every enumerated face";
          return r;
        }
      }
    }
  }
  r.passed = true;
  r.detail = std::to_string(eqs.size()) + " extreme equilibria, " +
             std::to_string(grid_nash) + " grid equilibria";
  return r;
}

TrialResult StrictlyDominantTrial(const Game& game) {
  TrialResult r;
  const DominanceResult red = IteratedStrictDominance(game);
  std::size_t expected_removals = 0;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    expected_removals += game.num_actions(i) - 1;
    if (red.reduced.num_actions(i) != 1) {
      r.detail = "dominance did not reduce player " + std::to_string(i + 1);
      return r;
    }
  }
  if (red.trace.size() != expected_removals) {
    r.detail = "unexpected elimination count";
    return r;
  }
  r.nontrivial = expected_removals > 0;
  const MarcVerdict v = MarcCheck(game);
  r.passed = v.status == Verdict::kHolds;
  r.detail = std::string("verdict ") + VerdictName(v.status) +
             (v.witness ? " at " + FormatProfile(game, *v.witness) : "") +
             (v.reason.empty() ? "" : ": " + v.reason);
  return r;
}

SuiteReport CounterexampleFamily(const GeneratorSpec& spec, std::size_t count) {
  SuiteReport report;
  report.name = "counterexample-family";
  report.spec = spec;
  report.nontrivial_meaning = "games with three or more players";
  std::size_t n = spec.min_players;
  for (std::size_t k = 0; k < count; ++k, ++n) {
    if (n > spec.max_players) n = spec.min_players;
    TrialResult r;
    r.index = k;
    r.nontrivial = n >= 3;
    try {
      const Game game = BuildCounterexample(n);
      const MarcVerdict v = MarcCheck(game);
      bool ok = v.status == Verdict::kFails && v.nash_complete &&
                v.values[0] == Rational(2) && v.values[1] == Rational(2);
      for (const auto& row : v.nash_table) {
        ok = ok && row.mismatch_player.has_value();
      }
      r.passed = ok;
      r.detail = std::to_string(n) + " players: verdict " +
                 VerdictName(v.status) + ", V = " + Join(v.values) + ", " +
                 std::to_string(v.nash_table.size()) + " equilibria";
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    report.trials.push_back(std::move(r));
  }
  report.count = count;
  for (const auto& t : report.trials) {
    (t.passed ? report.passed : report.failed)++;
    if (t.nontrivial) ++report.nontrivial;
  }
  return report;
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "zero-sum-marc",         "minimax-duality",
      "zero-sum-reduction",    "remark1-biconditional",
      "counterexample-family", "mode-ordering",
      "nash-oracle-crosscheck", "strictly-dominant-marc"};
  return names;
}

GeneratorSpec DefaultSpec(const std::string& suite) {
  GeneratorSpec spec;
  if (suite == "zero-sum-marc" || suite == "minimax-duality" ||
      suite == "zero-sum-reduction") {
    spec.game_class = GameClass::kZeroSum;
  } else if (suite == "remark1-biconditional") {
    spec.max_players = 3;
    spec.max_actions = 3;
  } else if (suite == "counterexample-family") {
    spec.max_players = 5;
  } else if (suite == "nash-oracle-crosscheck") {
    spec.max_actions = 3;
  } else if (suite == "strictly-dominant-marc") {
    spec.game_class = GameClass::kStrictlyDominant;
    spec.max_players = 3;
    spec.max_actions = 3;
  } else if (suite != "mode-ordering") {
    throw InputError("unknown suite '" + suite + "'");
  }
  return spec;
}

SuiteReport RunSuite(const std::string& name, const GeneratorSpec& spec,
                     std::size_t count) {
  CheckSpec(spec);
  if (name == "zero-sum-marc") {
    return RunOverGames(name, spec, count, "games without a pure saddle point",
                        [](const Game& g, std::size_t) {
                          return ZeroSumMarcTrial(g);
                        });
  }
  if (name == "minimax-duality") {
    return RunOverGames(name, spec, count, "games without a pure saddle point",
                        [](const Game& g, std::size_t) {
                          return MinimaxDualityTrial(g);
                        });
  }
  if (name == "zero-sum-reduction") {
    return RunOverGames(name, spec, count, "games without a pure saddle point",
                        [](const Game& g, std::size_t) {
                          return ZeroSumReductionTrial(g);
                        });
  }
  if (name == "remark1-biconditional") {
    return RunOverGames(
        name, spec, count,
        "trials exercising both a Nash and a non-Nash profile",
        [&spec](const Game& g, std::size_t k) {
          return BiconditionalTrial(g, k, spec.seed);
        });
  }
  if (name == "counterexample-family") {
    return CounterexampleFamily(spec, count);
  }
  if (name == "mode-ordering") {
    return RunOverGames(
        name, spec, count,
        "games where tie-breaking or mixing changes a commitment value",
        [](const Game& g, std::size_t) { return ModeOrderingTrial(g); });
  }
  if (name == "nash-oracle-crosscheck") {
    return RunOverGames(
        name, spec, count, "games with a mixed or degenerate equilibrium",
        [](const Game& g, std::size_t) { return NashOracleTrial(g); });
  }
  if (name == "strictly-dominant-marc") {
    return RunOverGames(
        name, spec, count, "games where some action is eliminated",
        [](const Game& g, std::size_t) { return StrictlyDominantTrial(g); });
  }
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace marc
