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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "marc/catalog.h"
#include "marc/commitment.h"
#include "marc/equilibrium.h"
#include "marc/errors.h"
#include "marc/harness.h"
#include "marc/lp.h"

namespace marc {
namespace {

MixedStrategy Mix(std::size_t owner, std::vector<Rational> w) {
  return MixedStrategy(owner, std::move(w));
}

Profile Pure(const Game& g, std::vector<std::size_t> a) {
  return Profile::Pure(g, a);
}

CommitmentSolution Solve(const Game& g, std::size_t player, TieBreak mode,
                         CommitmentSpace space) {
  return CommitmentOptimal(g, player, mode, space);
}

// Each witness's response is an equilibrium of the induced game and pays the
// reported value.
void CheckWitnesses(const Game& g, const CommitmentSolution& s) {
  for (const auto& w : s.witnesses) {
    const Profile full = w.response.Complete(w.commitment);
    CHECK(ExpectedUtility(g, full, s.player) == w.value);
    if (s.attained) CHECK(w.value == s.value);
    const InducedGame induced = Restrict(g, s.player, w.commitment);
    std::vector<MixedStrategy> rest;
    for (std::size_t k = 0; k < induced.original_players.size(); ++k) {
      rest.push_back(full[induced.original_players[k]].WithOwner(k));
    }
    CHECK(CheckNash(induced.game, Profile(rest)).is_nash());
  }
}

TEST_CASE("maximin") {
  const MaximinSolution mp = Maximin(MatchingPennies(), 0);
  CHECK(mp.value == Rational(0));
  CHECK(mp.strategy == MixedStrategy::Uniform(0, 2));

  const Game rows({{"r1", "r2"}, {"c1", "c2"}},
                  {Rational(3), Rational(-3), Rational(1), Rational(-1),
                   Rational(2), Rational(-2), Rational(0), Rational(0)});
  const MaximinSolution r = Maximin(rows, 0);
  CHECK(r.value == Rational(1));
  CHECK(r.strategy == MixedStrategy::Pure(0, 0, 2));

  const Game one({{"a"}, {"b"}}, {Rational(-7, 2), Rational(7, 2)});
  CHECK(Maximin(one, 0).value == Rational(-7, 2));
  CHECK(Maximin(one, 1).value == Rational(7, 2));

  CHECK_THROWS_AS(Maximin(CoordinationCounterexample(), 0), InputError);
}

TEST_CASE("maximin cross-checked on a grid") {
  const Game g = MatchingPennies();
  Rational best(-100);
  for (int k = 0; k <= 100; ++k) {
    const MixedStrategy x = Mix(0, {Rational(k, 100), Rational(100 - k, 100)});
    const auto v = ActionValues(g, 1, OpponentProfile(1, {x}));
    // Player 1's guaranteed payoff is minus player 2's best reply.
    best = std::max(best, -*std::max_element(v.begin(), v.end()));
  }
  CHECK(best == Maximin(g, 0).value);
}

TEST_CASE("coordination game commitments") {
  const Game g = CoordinationCounterexample();
  for (std::size_t i = 0; i < 2; ++i) {
    const auto s = Solve(g, i, TieBreak::kOptimistic, CommitmentSpace::kMixed);
    CHECK(s.value == Rational(2));
    CHECK(s.attained);
    CHECK(s.exact);
    REQUIRE(s.witnesses.size() == 1);
    CHECK(s.witnesses[0].commitment == MixedStrategy::Pure(i, i, 2));
    CHECK(s.witnesses[0].response.of(1 - i) == MixedStrategy::Pure(1 - i, i, 2));
    CheckWitnesses(g, s);
  }
}

TEST_CASE("dominance-solvable game, pure commitments") {
  const Game g = DominanceSolvableCounterexample();
  const auto p1 = Solve(g, 0, TieBreak::kOptimistic, CommitmentSpace::kPure);
  CHECK(p1.value == Rational(3));
  REQUIRE(p1.witnesses.size() == 1);
  CHECK(p1.witnesses[0].commitment == MixedStrategy::Pure(0, 0, 2));
  CHECK(p1.witnesses[0].response.of(1) == MixedStrategy::Pure(1, 1, 2));
  const auto p2 = Solve(g, 1, TieBreak::kOptimistic, CommitmentSpace::kPure);
  CHECK(p2.value == Rational(4));
  REQUIRE(p2.witnesses.size() == 1);
  CHECK(p2.witnesses[0].commitment == MixedStrategy::Pure(1, 0, 2));
  CHECK(p2.witnesses[0].response.of(0) == MixedStrategy::Pure(0, 1, 2));
  CheckWitnesses(g, p1);
  CheckWitnesses(g, p2);
}

// Leader commits p on x1. The follower takes y2 when p >= 1/2 (leader earns
// 4 - p) and x2 when p <= 1/2 (leader earns 2 - p).
Rational RegionOracle() {
  Rational best(-1000);
  for (int region = 0; region < 2; ++region) {
    LinearProgram lp;
    lp.objective = {Rational(-1)};
    lp.bounds = {VariableBounds{Rational(0), Rational(1)}};
    lp.AddConstraint({Rational(1)},
                     region == 0 ? Relation::kGreaterEqual : Relation::kLessEqual,
                     Rational(1, 2));
    const LpOutcome out = SolveLp(lp);
    REQUIRE(out.optimal());
    best = std::max(best, out.value + Rational(region == 0 ? 4 : 2));
  }
  return best;
}

TEST_CASE("dominance-solvable game, mixed commitments") {
  const Game g = DominanceSolvableCounterexample();
  const auto s = Solve(g, 0, TieBreak::kOptimistic, CommitmentSpace::kMixed);
  CHECK(s.value == RegionOracle());
  CHECK(s.value == Rational(7, 2));
  CHECK(s.attained);
  REQUIRE(s.witnesses.size() == 1);
  CHECK(s.witnesses[0].commitment == MixedStrategy::Uniform(0, 2));
  CHECK(s.witnesses[0].response.of(1) == MixedStrategy::Pure(1, 1, 2));
  CheckWitnesses(g, s);

  // Pessimistically the follower breaks the tie at p = 1/2 toward x2: the
  // supremum 7/2 is approached but not reached.
  const auto pess = Solve(g, 0, TieBreak::kPessimistic, CommitmentSpace::kMixed);
  CHECK(pess.value == Rational(7, 2));
  CHECK_FALSE(pess.attained);

  const auto p2 = Solve(g, 1, TieBreak::kOptimistic, CommitmentSpace::kMixed);
  CHECK(p2.value == Rational(4));
  REQUIRE_FALSE(p2.witnesses.empty());
  CHECK(p2.witnesses[0].commitment == MixedStrategy::Pure(1, 0, 2));
  CHECK(p2.witnesses[0].response.of(0) == MixedStrategy::Pure(0, 1, 2));
}

TEST_CASE("commitment in zero-sum games equals maximin") {
  const GeneratorSpec spec{.seed = 99, .game_class = GameClass::kZeroSum};
  for (const Game& g : Generate(spec, 40)) {
    for (std::size_t i = 0; i < 2; ++i) {
      const Rational v = Maximin(g, i).value;
      for (TieBreak mode : {TieBreak::kOptimistic, TieBreak::kPessimistic}) {
        const auto s = Solve(g, i, mode, CommitmentSpace::kMixed);
        CHECK(s.value == v);
        CHECK(s.attained);
        CheckWitnesses(g, s);
      }
    }
  }
}

TEST_CASE("mode and space ordering on random games") {
  const GeneratorSpec spec{.seed = 123, .max_players = 3, .max_actions = 3};
  for (const Game& g : Generate(spec, 25)) {
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      const auto om = Solve(g, i, TieBreak::kOptimistic, CommitmentSpace::kMixed);
      const auto pm = Solve(g, i, TieBreak::kPessimistic, CommitmentSpace::kMixed);
      const auto op = Solve(g, i, TieBreak::kOptimistic, CommitmentSpace::kPure);
      const auto pp = Solve(g, i, TieBreak::kPessimistic, CommitmentSpace::kPure);
      CHECK(om.value >= pm.value);
      CHECK(op.value >= pp.value);
      CHECK(op.value <= om.value);
      CHECK(pp.value <= pm.value);
      CheckWitnesses(g, om);
      CheckWitnesses(g, op);
    }
  }
}

TEST_CASE("evaluate a fixed commitment") {
  const Game g = DominanceSolvableCounterexample();
  const auto half = EvaluateCommitment(g, 0, MixedStrategy::Uniform(0, 2),
                                       TieBreak::kOptimistic);
  REQUIRE(half.has_value());
  CHECK(half->value == Rational(7, 2));
  const auto worst = EvaluateCommitment(g, 0, MixedStrategy::Uniform(0, 2),
                                        TieBreak::kPessimistic);
  REQUIRE(worst.has_value());
  CHECK(worst->value == Rational(3, 2));
}

TEST_CASE("marc verdicts") {
  const Game coord = CoordinationCounterexample();
  const MarcVerdict f = MarcCheck(coord);
  CHECK(f.status == Verdict::kFails);
  CHECK(f.values == std::vector<Rational>{Rational(2), Rational(2)});
  CHECK(f.nash_complete);
  REQUIRE(f.nash_table.size() == 3);
  std::vector<std::vector<Rational>> payoffs;
  for (const auto& row : f.nash_table) {
    payoffs.push_back(row.payoffs);
    CHECK(row.mismatch_player.has_value());
  }
  std::sort(payoffs.begin(), payoffs.end());
  CHECK(payoffs == std::vector<std::vector<Rational>>{
                       {Rational(2, 3), Rational(2, 3)},
                       {Rational(1), Rational(2)},
                       {Rational(2), Rational(1)}});

  const MarcVerdict mp = MarcCheck(MatchingPennies());
  CHECK(mp.status == Verdict::kHolds);
  REQUIRE(mp.witness.has_value());
  CHECK(CheckNash(MatchingPennies(), *mp.witness).is_nash());

  // Prisoner's dilemma: defection strictly dominant.
  const Game pd({{"c", "d"}, {"c", "d"}},
                {Rational(3), Rational(3), Rational(0), Rational(5),
                 Rational(5), Rational(0), Rational(1), Rational(1)});
  const MarcVerdict h = MarcCheck(pd);
  CHECK(h.status == Verdict::kHolds);
  CHECK(*h.witness == Pure(pd, {1, 1}));

  const Game ds = DominanceSolvableCounterexample();
  CHECK(MarcCheck(ds, CommitmentSpace::kPure).status == Verdict::kFails);
  CHECK(MarcCheck(ds, CommitmentSpace::kMixed).status == Verdict::kFails);

  const MarcVerdict three = MarcCheck(BuildCounterexample(3));
  CHECK(three.status == Verdict::kFails);
  CHECK(three.values[0] == Rational(2));
  CHECK(three.values[1] == Rational(2));
}

TEST_CASE("condition checker") {
  const Game g = CoordinationCounterexample();
  const Profile actual = Pure(g, {0, 1});
  const ConjectureProfile conj(
      {OpponentProfile(0, {MixedStrategy::Pure(1, 0, 2)}),
       OpponentProfile(1, {MixedStrategy::Pure(0, 0, 2)})});
  const auto c = CheckMarcConditions(g, actual, conj);
  REQUIRE(c.size() == 2);
  CHECK(c[0].rational);
  CHECK_FALSE(c[0].correct);
  CHECK(c[1].correct);
  // x1 is player 2's only best response to x1.
  CHECK_FALSE(c[1].rational);
  CHECK(c[0].commitment_optimal == true);
  CHECK(c[1].commitment_optimal == true);

  const Game mp = MatchingPennies();
  const Profile maximin({Maximin(mp, 0).strategy, Maximin(mp, 1).strategy});
  for (const auto& pc :
       CheckMarcConditions(mp, maximin, ConjectureProfile::CorrectFor(maximin))) {
    CHECK(pc.AllHold());
    CHECK(pc.realized_optimum);
  }

  // At any Nash profile with correct conjectures everyone is rational.
  const GeneratorSpec spec{.seed = 17, .max_actions = 3};
  for (const Game& r : Generate(spec, 15)) {
    for (const auto& e : EnumerateMixedNash2p(r)) {
      for (const auto& pc : CheckMarcConditions(
               r, e.profile, ConjectureProfile::CorrectFor(e.profile))) {
        CHECK(pc.correct);
        CHECK(pc.rational);
      }
    }
  }
}

}  // namespace
}  // namespace marc
