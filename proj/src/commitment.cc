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

#include "marc/commitment.h"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "marc/errors.h"
#include "marc/lp.h"

namespace marc {

const char* TieBreakName(TieBreak mode) {
  return mode == TieBreak::kOptimistic ? "optimistic" : "pessimistic";
}

const char* CommitmentSpaceName(CommitmentSpace space) {
  return space == CommitmentSpace::kPure ? "pure" : "mixed";
}

const char* VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kFails:
      return "fails";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Payoff matrix of `player` against the other player of a two-player game,
// indexed [own action][opponent action].
Matrix OwnMatrix(const Game& game, std::size_t player) {
  const std::size_t other = 1 - player;
  Matrix m(game.num_actions(player),
           std::vector<Rational>(game.num_actions(other)));
  std::size_t cell[2];
  for (std::size_t k = 0; k < game.num_actions(player); ++k) {
    for (std::size_t j = 0; j < game.num_actions(other); ++j) {
      cell[player] = k;
      cell[other] = j;
      m[k][j] = game.payoff(cell, player);
    }
  }
  return m;
}

std::vector<Rational> Head(const std::vector<Rational>& v, std::size_t n) {
  return std::vector<Rational>(v.begin(),
                               v.begin() + static_cast<std::ptrdiff_t>(n));
}

// Variables: a distribution over `size` entries followed by `extra` free
// variables.
LinearProgram SimplexProgram(std::size_t size, std::size_t extra) {
  LinearProgram lp;
  lp.objective.assign(size + extra, Rational(0));
  lp.bounds.assign(size + extra, VariableBounds::NonNegative());
  for (std::size_t e = 0; e < extra; ++e) {
    lp.bounds[size + e] = VariableBounds::Free();
  }
  std::vector<Rational> sum(size + extra, Rational(1));
  for (std::size_t e = 0; e < extra; ++e) sum[size + e] = 0;
  lp.AddConstraint(std::move(sum), Relation::kEqual, Rational(1));
  return lp;
}

// The commitment problem of `leader` after opponents' strictly dominated
// actions are gone and at most one opponent (the follower) still has a
// choice. The follower may be absent, in which case it is modeled with a
// single dummy action.
struct LeaderFollower {
  std::size_t leader = 0;
  std::optional<std::size_t> follower;
  std::vector<std::size_t> follower_actions;  // original indices
  std::vector<std::size_t> fixed_action;      // per original player
  Matrix leader_payoff;                       // [leader action][follower]
  Matrix follower_payoff;

  std::size_t leader_count() const { return leader_payoff.size(); }
  std::size_t follower_count() const { return leader_payoff[0].size(); }

  Rational LeaderValue(const std::vector<Rational>& t, std::size_t a) const {
    Rational v;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (!t[k].is_zero()) v += t[k] * leader_payoff[k][a];
    }
    return v;
  }

  OpponentProfile Response(const Game& game, std::size_t a) const {
    std::vector<MixedStrategy> others;
    for (std::size_t j = 0; j < game.num_players(); ++j) {
      if (j == leader) continue;
      const std::size_t action =
          follower && j == *follower ? follower_actions[a] : fixed_action[j];
      others.push_back(MixedStrategy::Pure(j, action, game.num_actions(j)));
    }
    return OpponentProfile(leader, std::move(others));
  }
};

// Removes opponents' strictly dominated actions (the leader's actions are
// kept so that the reduction is valid for every commitment). Returns the
// leader-follower problem when at most one opponent keeps several actions.
std::optional<LeaderFollower> ReduceToLeaderFollower(
    const Game& game, std::size_t leader, DominanceResult* reduction_out) {
  std::vector<bool> eligible(game.num_players(), true);
  eligible[leader] = false;
  DominanceResult red = IteratedStrictDominance(game, eligible);
  const Game& g = red.reduced;
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < g.num_players(); ++j) {
    if (j != leader && g.num_actions(j) > 1) active.push_back(j);
  }
  if (reduction_out) *reduction_out = red;
  if (active.size() > 1) return std::nullopt;

  LeaderFollower lf;
  lf.leader = leader;
  lf.fixed_action.assign(game.num_players(), 0);
  for (std::size_t j = 0; j < game.num_players(); ++j) {
    if (j != leader) lf.fixed_action[j] = red.surviving[j][0];
  }
  std::size_t follower_count = 1;
  if (!active.empty()) {
    lf.follower = active[0];
    lf.follower_actions = red.surviving[active[0]];
    follower_count = lf.follower_actions.size();
  }
  const std::size_t m = game.num_actions(leader);
  lf.leader_payoff.assign(m, std::vector<Rational>(follower_count));
  lf.follower_payoff.assign(m, std::vector<Rational>(follower_count));
  std::vector<std::size_t> cell(g.num_players(), 0);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t a = 0; a < follower_count; ++a) {
      std::fill(cell.begin(), cell.end(), 0);
      cell[leader] = k;
      if (lf.follower) cell[*lf.follower] = a;
      lf.leader_payoff[k][a] = g.payoff(cell, leader);
      if (lf.follower) lf.follower_payoff[k][a] = g.payoff(cell, *lf.follower);
    }
  }
  return lf;
}

// Region of commitments where follower action `a` is a best response:
// sum_k t_k (F[k][a] - F[k][b]) >= slack for every b in `others`.
void AddPreferenceRows(LinearProgram& lp, const LeaderFollower& lf,
                       std::size_t a, const std::vector<std::size_t>& others,
                       Relation relation, std::optional<std::size_t> slack_var) {
  const std::size_t m = lf.leader_count();
  for (std::size_t b : others) {
    std::vector<Rational> row(lp.num_variables());
    for (std::size_t k = 0; k < m; ++k) {
      row[k] = lf.follower_payoff[k][a] - lf.follower_payoff[k][b];
    }
    if (slack_var) row[*slack_var] = -1;
    lp.AddConstraint(std::move(row), relation, Rational(0));
  }
}

void SolveOptimistic(const Game& game, const LeaderFollower& lf,
                     CommitmentSolution& out) {
  const std::size_t m = lf.leader_count();
  const std::size_t nf = lf.follower_count();
  struct Region {
    std::size_t action;
    Rational value;
    std::vector<Rational> t;
  };
  std::vector<Region> regions;
  for (std::size_t a = 0; a < nf; ++a) {
    LinearProgram lp = SimplexProgram(m, 0);
    for (std::size_t k = 0; k < m; ++k) lp.objective[k] = lf.leader_payoff[k][a];
    std::vector<std::size_t> others;
    for (std::size_t b = 0; b < nf; ++b) {
      if (b != a) others.push_back(b);
    }
    AddPreferenceRows(lp, lf, a, others, Relation::kGreaterEqual, std::nullopt);
    const LpOutcome r = SolveLp(lp);
    if (r.optimal()) regions.push_back({a, r.value, r.point});
  }
  if (regions.empty()) {
    throw InternalError("no follower action is ever a best response");
  }
  Rational best = regions[0].value;
  for (const auto& r : regions) best = std::max(best, r.value);
  out.value = best;
  for (const auto& r : regions) {
    if (r.value != best) continue;
    out.witnesses.push_back({MixedStrategy(lf.leader, r.t),
                             lf.Response(game, r.action), r.value});
  }
}

// Pessimistic values via the cells of commitments on which the follower's
// best-response set is exactly S. On a nonempty cell the leader's payoff is
// min over S, whose supremum over the cell equals its maximum over the
// cell's closure; that maximum is attained inside the cell iff a maximizer
// can keep every action outside S strictly worse.
void SolvePessimistic(const Game& game, const LeaderFollower& lf,
                      CommitmentSolution& out) {
  const std::size_t m = lf.leader_count();
  const std::size_t nf = lf.follower_count();
  if (nf > 20) throw InputError("too many follower actions for cell search");
  bool any = false;
  std::optional<Rational> best_attained;
  struct Cell {
    Rational sup;
    bool attained;
    std::vector<Rational> t;
    std::size_t response;
  };
  std::vector<Cell> cells;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nf); ++mask) {
    std::vector<std::size_t> in, out_of;
    for (std::size_t a = 0; a < nf; ++a) {
      (mask >> a & 1 ? in : out_of).push_back(a);
    }
    const std::size_t anchor = in[0];
    const std::vector<std::size_t> tied(in.begin() + 1, in.end());
    const std::size_t extra = m;  // index of the auxiliary variable

    // Is the open cell nonempty?
    LinearProgram open = SimplexProgram(m, 1);
    open.objective[extra] = 1;
    open.bounds[extra].upper = Rational(1);
    AddPreferenceRows(open, lf, anchor, tied, Relation::kEqual, std::nullopt);
    AddPreferenceRows(open, lf, anchor, out_of, Relation::kGreaterEqual, extra);
    const LpOutcome open_r = SolveLp(open);
    if (!open_r.optimal() || open_r.value.sign() <= 0) continue;

    // Supremum of min_{a in S} leader payoff over the closed cell.
    LinearProgram closed = SimplexProgram(m, 1);
    closed.objective[extra] = 1;
    AddPreferenceRows(closed, lf, anchor, tied, Relation::kEqual, std::nullopt);
    AddPreferenceRows(closed, lf, anchor, out_of, Relation::kGreaterEqual,
                      std::nullopt);
    for (std::size_t a : in) {
      std::vector<Rational> row(m + 1);
      for (std::size_t k = 0; k < m; ++k) row[k] = lf.leader_payoff[k][a];
      row[extra] = -1;
      closed.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
    }
    const LpOutcome sup_r = SolveLp(closed);
    if (!sup_r.optimal()) {
      throw InternalError("closed best-response cell without a maximum");
    }

    // Can the supremum be reached inside the open cell?
    LinearProgram reach = SimplexProgram(m, 1);
    reach.objective[extra] = 1;
    reach.bounds[extra].upper = Rational(1);
    AddPreferenceRows(reach, lf, anchor, tied, Relation::kEqual, std::nullopt);
    AddPreferenceRows(reach, lf, anchor, out_of, Relation::kGreaterEqual, extra);
    for (std::size_t a : in) {
      std::vector<Rational> row(m + 1);
      for (std::size_t k = 0; k < m; ++k) row[k] = lf.leader_payoff[k][a];
      reach.AddConstraint(std::move(row), Relation::kGreaterEqual, sup_r.value);
    }
    const LpOutcome reach_r = SolveLp(reach);
    const bool attained = reach_r.optimal() && reach_r.value.sign() > 0;
    Cell cell{sup_r.value, attained, {}, anchor};
    if (attained) {
      cell.t = Head(reach_r.point, m);
      Rational worst = lf.LeaderValue(cell.t, anchor);
      for (std::size_t a : in) {
        const Rational v = lf.LeaderValue(cell.t, a);
        if (v < worst) {
          worst = v;
          cell.response = a;
        }
      }
      if (worst != cell.sup) {
        throw InternalError("pessimistic witness misses its cell supremum");
      }
      if (!best_attained || cell.sup > *best_attained) {
        best_attained = cell.sup;
      }
    }
    any = true;
    cells.push_back(std::move(cell));
  }
  if (!any) throw InternalError("best-response cells cover no commitment");
  Rational best = cells[0].sup;
  for (const auto& c : cells) best = std::max(best, c.sup);
  out.value = best;
  out.attained = false;
  for (const auto& c : cells) {
    if (c.sup != best || !c.attained) continue;
    out.attained = true;
    out.witnesses.push_back({MixedStrategy(lf.leader, c.t),
                             lf.Response(game, c.response), c.sup});
  }
  if (!out.attained) {
    out.best_attained = best_attained;
    out.notes.push_back(
        "supremum " + best.ToString() +
        " is approached only where the follower's tie-breaking turns "
        "adverse; it is not attained" +
        (best_attained ? "; best attained cell value " +
                             best_attained->ToString()
                       : std::string()));
  }
}

void SolvePureCommitments(const Game& game, std::size_t player, TieBreak mode,
                          CommitmentSolution& out) {
  bool have_value = false;
  for (std::size_t k = 0; k < game.num_actions(player); ++k) {
    const MixedStrategy commitment =
        MixedStrategy::Pure(player, k, game.num_actions(player));
    auto eval = EvaluateCommitment(game, player, commitment, mode);
    if (!eval) {
      out.exact = false;
      out.notes.push_back("no equilibrium found in the game induced by " +
                          game.action_names(player)[k]);
      continue;
    }
    if (!eval->complete) {
      out.exact = false;
      out.notes.push_back(
          "equilibria induced by " + game.action_names(player)[k] +
          " enumerated over pure profiles only");
    }
    if (!have_value || eval->value > out.value) {
      out.value = eval->value;
      out.witnesses.clear();
      have_value = true;
    }
    if (eval->value == out.value) {
      out.witnesses.push_back({commitment, eval->response, eval->value});
    }
  }
  if (!have_value) {
    out.attained = false;
    out.exact = false;
    out.notes.push_back("no pure commitment has a findable induced equilibrium");
  }
}

}  // namespace

MaximinSolution Maximin(const Game& game, std::size_t player) {
  if (!game.is_zero_sum()) {
    throw InputError("maximin strategies are defined here for two-player "
                     "zero-sum games only");
  }
  if (player > 1) throw InputError("player out of range");
  const Matrix own = OwnMatrix(game, player);
  const std::size_t m = own.size();
  const std::size_t n = own[0].size();

  // maximize v s.t. sum_k t_k own[k][j] >= v for every opponent action j.
  LinearProgram primal = SimplexProgram(m, 1);
  primal.objective[m] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(m + 1);
    for (std::size_t k = 0; k < m; ++k) row[k] = own[k][j];
    row[m] = -1;
    primal.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
  }
  const LpOutcome p = SolveLp(primal);

  // minimize w s.t. sum_j y_j own[k][j] <= w for every own action k.
  LinearProgram dual = SimplexProgram(n, 1);
  dual.objective[n] = -1;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Rational> row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = own[k][j];
    row[n] = -1;
    dual.AddConstraint(std::move(row), Relation::kLessEqual, Rational(0));
  }
  const LpOutcome d = SolveLp(dual);
  if (!p.optimal() || !d.optimal() || p.value != -d.value) {
    throw InternalError("maximin LP and its dual disagree");
  }
  return {player, MixedStrategy(player, Head(p.point, m)), p.value,
          MixedStrategy(1 - player, Head(d.point, n))};
}

std::optional<CommitmentEvaluation> EvaluateCommitment(
    const Game& game, std::size_t player, const MixedStrategy& commitment,
    TieBreak mode) {
  if (game.num_players() == 1) {
    return CommitmentEvaluation{
        ExpectedUtility(game, Profile(std::vector<MixedStrategy>{commitment}),
                        player),
        OpponentProfile(player, {}), true};
  }
  const InducedGame induced = Restrict(game, player, commitment);
  const NashEnumeration nash = EnumerateExtremeNash(induced.game);
  std::optional<CommitmentEvaluation> best;
  for (const auto& eq : nash.equilibria) {
    std::vector<MixedStrategy> others;
    for (std::size_t k = 0; k < induced.original_players.size(); ++k) {
      others.push_back(eq.profile[k].WithOwner(induced.original_players[k]));
    }
    OpponentProfile response(player, std::move(others));
    Rational value =
        ExpectedUtility(game, response.Complete(commitment), player);
    const bool better =
        !best || (mode == TieBreak::kOptimistic ? value > best->value
                                                : value < best->value);
    if (better) {
      best = CommitmentEvaluation{std::move(value), std::move(response),
                                  nash.complete};
    }
  }
  if (best) best->complete = nash.complete;
  return best;
}

CommitmentSolution CommitmentOptimal(const Game& game, std::size_t player,
                                     TieBreak mode, CommitmentSpace space) {
  if (player >= game.num_players()) throw InputError("player out of range");
  CommitmentSolution out;
  out.player = player;
  out.mode = mode;
  out.space = space;

  if (space == CommitmentSpace::kPure) {
    SolvePureCommitments(game, player, mode, out);
    return out;
  }

  DominanceResult reduction{game, {}, {}, {}};
  auto lf = ReduceToLeaderFollower(game, player, &reduction);
  if (lf) {
    if (mode == TieBreak::kOptimistic) {
      SolveOptimistic(game, *lf, out);
    } else {
      SolvePessimistic(game, *lf, out);
    }
    if (!reduction.trace.empty()) {
      out.notes.push_back(std::to_string(reduction.trace.size()) +
                          " strictly dominated opponent action(s) removed "
                          "before solving");
    }
    return out;
  }

  // Several opponents keep a choice: search pure commitments and compare
  // with the largest payoff any surviving profile can give.
  SolvePureCommitments(game, player, mode, out);
  out.exact = false;
  const Game& g = reduction.reduced;
  std::optional<Rational> ceiling;
  for (std::size_t p = 0; p < g.num_profiles(); ++p) {
    if (!ceiling || g.payoff(p, player) > *ceiling) ceiling = g.payoff(p, player);
  }
  if (out.attained && ceiling && out.value == *ceiling && out.notes.empty()) {
    out.exact = true;
    out.notes.push_back(
        "mixed commitments not searched; pure optimum meets the payoff "
        "ceiling " + ceiling->ToString() + " so it is exact");
  } else {
    out.notes.push_back(
        "mixed commitments not searched for games where several opponents "
        "keep a choice; value is a lower bound");
  }
  return out;
}

namespace {

bool IsPureProfile(const Profile& p) { return p.PureActions().has_value(); }

}  // namespace

MarcVerdict MarcCheck(const Game& game, CommitmentSpace space) {
  const std::size_t n = game.num_players();
  MarcVerdict v;
  v.space = space;
  std::vector<CommitmentSolution> pessimistic;
  for (std::size_t i = 0; i < n; ++i) {
    CommitmentSolution opt =
        CommitmentOptimal(game, i, TieBreak::kOptimistic, space);
    v.values.push_back(opt.value);
    v.values_exact.push_back(opt.exact && opt.attained);
    pessimistic.push_back(
        CommitmentOptimal(game, i, TieBreak::kPessimistic, space));
    v.pessimistic_values.push_back(pessimistic.back().value);
    v.pessimistic_attained.push_back(pessimistic.back().attained);
  }
  const bool all_exact =
      std::all_of(v.values_exact.begin(), v.values_exact.end(),
                  [](bool b) { return b; });

  NashEnumeration nash = EnumerateExtremeNash(game);
  v.nash_complete = nash.complete;
  v.reduction_trace = nash.reduction.trace;

  bool all_certified = true;
  for (const auto& eq : nash.equilibria) {
    NashPayoffRow row{eq.profile, {}, eq.degenerate, std::nullopt, ""};
    for (std::size_t i = 0; i < n; ++i) {
      row.payoffs.push_back(ExpectedUtility(game, eq.profile, i));
    }
    const bool pure = IsPureProfile(eq.profile);
    if (space == CommitmentSpace::kPure && !pure) {
      for (std::size_t i = 0; i < n && !row.mismatch_player; ++i) {
        if (!eq.profile[i].PureAction()) {
          row.mismatch_player = i;
          row.mismatch_reason = "strategy is not a pure commitment";
        }
      }
    }
    for (std::size_t i = 0; i < n && !row.mismatch_player; ++i) {
      const Rational& u = row.payoffs[i];
      if (v.values_exact[i] && u > v.values[i] &&
          (space == CommitmentSpace::kMixed || pure)) {
        throw InternalError("equilibrium payoff exceeds commitment value");
      }
      if (u == v.values[i]) continue;
      // With an inexact V_i only u_i < V_i is a certified miss.
      if (v.values_exact[i] || u < v.values[i]) {
        row.mismatch_player = i;
        row.mismatch_reason = "u = " + u.ToString() + " but V = " +
                              v.values[i].ToString();
      }
    }
    bool matches = !row.mismatch_player;
    for (std::size_t i = 0; matches && i < n; ++i) {
      matches = row.payoffs[i] == v.values[i];
    }
    if (matches && all_exact && !v.witness) v.witness = eq.profile;
    if (!row.mismatch_player) all_certified = false;
    v.nash_table.push_back(std::move(row));
  }

  if (v.witness) {
    v.status = Verdict::kHolds;
    v.conjectures = ConjectureProfile::CorrectFor(*v.witness);
    if (!CheckNash(game, *v.witness).is_nash()) {
      throw InternalError("MARC witness is not a Nash equilibrium");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!IsCorrect(*v.conjectures, *v.witness, i)) {
        throw InternalError("MARC witness conjectures are not correct");
      }
    }
  } else if (nash.complete && all_certified) {
    v.status = Verdict::kFails;
  } else {
    v.status = Verdict::kUnknown;
    v.reason = !nash.complete
                   ? "mixed equilibria of games with three or more "
                     "undominated players are not enumerated"
                   : "commitment values are lower bounds only";
  }

  // Same decision under pessimistic tie-breaking.
  bool pess_exact = true;
  bool pess_holds = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!pessimistic[i].exact) pess_exact = false;
  }
  for (const auto& row : v.nash_table) {
    if (pess_holds) break;
    if (space == CommitmentSpace::kPure && !IsPureProfile(row.profile)) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) {
      if (!v.pessimistic_attained[i] ||
          row.payoffs[i] != v.pessimistic_values[i]) {
        ok = false;
        break;
      }
      auto eval = EvaluateCommitment(game, i, row.profile[i],
                                     TieBreak::kPessimistic);
      ok = eval && eval->complete && eval->value == v.pessimistic_values[i];
    }
    pess_holds = ok;
  }
  if (pess_holds && pess_exact) {
    v.pessimistic_status = Verdict::kHolds;
  } else if (!pess_holds && pess_exact && nash.complete) {
    v.pessimistic_status = Verdict::kFails;
  } else {
    v.pessimistic_status = Verdict::kUnknown;
  }
  v.tie_break_sensitive = v.pessimistic_status != v.status;
  return v;
}

std::vector<PlayerConditions> CheckMarcConditions(
    const Game& game, const Profile& actual,
    const ConjectureProfile& conjectures, CommitmentSpace space) {
  CheckProfileShape(game, actual);
  if (conjectures.num_players() != game.num_players()) {
    throw InputError("conjecture profile does not match the game");
  }
  std::vector<PlayerConditions> out;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    PlayerConditions c;
    c.correct = IsCorrect(conjectures, actual, i);
    c.rational = IsRational(game, i, actual[i], conjectures.of(i));
    const CommitmentSolution sol =
        CommitmentOptimal(game, i, TieBreak::kOptimistic, space);
    c.commitment_value = sol.value;
    const bool feasible =
        space == CommitmentSpace::kMixed || actual[i].PureAction().has_value();
    auto eval = EvaluateCommitment(game, i, actual[i], TieBreak::kOptimistic);
    if (eval) c.actual_commitment_value = eval->value;
    if (!feasible) {
      c.commitment_optimal = false;
    } else if (sol.exact && sol.attained && eval && eval->complete) {
      c.commitment_optimal = eval->value == sol.value;
    }
    if (ExpectedUtility(game, actual, i) == sol.value) {
      if (game.num_players() == 1) {
        c.realized_optimum = true;
      } else {
        const InducedGame induced = Restrict(game, i, actual[i]);
        std::vector<MixedStrategy> rest;
        for (std::size_t k = 0; k < induced.original_players.size(); ++k) {
          rest.push_back(actual[induced.original_players[k]].WithOwner(k));
        }
        c.realized_optimum =
            CheckNash(induced.game, Profile(std::move(rest))).is_nash();
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace marc
