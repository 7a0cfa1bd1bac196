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
#include <vector>

#include "doctest.h"
#include "marc/catalog.h"
#include "marc/equilibrium.h"
#include "marc/errors.h"
#include "marc/game.h"
#include "marc/harness.h"

namespace marc {
namespace {

Profile Pure(const Game& g, std::vector<std::size_t> a) {
  return Profile::Pure(g, a);
}

MixedStrategy Mix(std::size_t owner, std::vector<Rational> w) {
  return MixedStrategy(owner, std::move(w));
}

TEST_CASE("expected utility on the coordination game") {
  const Game g = CoordinationCounterexample();
  CHECK(ExpectedUtility(g, Pure(g, {0, 0}), 0) == Rational(2));
  CHECK(ExpectedUtility(g, Pure(g, {0, 0}), 1) == Rational(1));
  const Profile uniform(
      {MixedStrategy::Uniform(0, 2), MixedStrategy::Uniform(1, 2)});
  CHECK(ExpectedUtility(g, uniform, 0) == Rational(3, 4));
  CHECK(ExpectedUtility(g, uniform, 1) == Rational(3, 4));
}

TEST_CASE("point masses read the tensor") {
  for (const Game& g : Generate(GeneratorSpec{.seed = 3, .max_players = 3}, 20)) {
    for (std::size_t p = 0; p < g.num_profiles(); ++p) {
      const auto a = g.ProfileActions(p);
      CHECK(g.ProfileIndex(a) == p);
      for (std::size_t i = 0; i < g.num_players(); ++i) {
        CHECK(ExpectedUtility(g, Pure(g, a), i) == g.payoff(p, i));
      }
    }
  }
}

TEST_CASE("zero-sum flag") {
  CHECK(IsZeroSum(MatchingPennies()));
  CHECK_FALSE(IsZeroSum(CoordinationCounterexample()));
  // Three players whose first two payoffs cancel is still not zero-sum.
  const Game three = Game::FromFunction(
      Game::DefaultActionNames(std::vector<std::size_t>{2, 2, 2}),
      [](std::span<const std::size_t> a, std::size_t i) -> Rational {
        const long long v = static_cast<long long>(a[0] + 2 * a[1]);
        if (i == 0) return Rational(v);
        if (i == 1) return Rational(-v);
        return Rational(0);
      });
  CHECK_FALSE(IsZeroSum(three));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Game({{"a"}, {}}, {}), InputError);
  CHECK_THROWS_AS(Game({{"a", "a"}, {"b"}}, std::vector<Rational>(4)),
                  InputError);
  CHECK_THROWS_AS(Game({{"a"}, {"b"}}, std::vector<Rational>(3)), InputError);
  CHECK_THROWS_AS(Mix(0, {Rational(1, 2), Rational(1, 3)}), InputError);
  CHECK_THROWS_AS(Mix(0, {Rational(3, 2), Rational(-1, 2)}), InputError);
  CHECK_THROWS_AS(Profile({MixedStrategy::Uniform(1, 2)}), InputError);
}

TEST_CASE("restrict slices the tensor") {
  const Game g = CoordinationCounterexample();
  const InducedGame row1 = Restrict(g, 0, MixedStrategy::Pure(0, 0, 2));
  REQUIRE(row1.game.num_players() == 1);
  CHECK(row1.original_players == std::vector<std::size_t>{1});
  CHECK(row1.game.payoff(std::size_t{0}, 0) == Rational(1));
  CHECK(row1.game.payoff(std::size_t{1}, 0) == Rational(0));
  CHECK_FALSE(row1.InducedIndex(0).has_value());
  CHECK(row1.InducedIndex(1) == 0);
}

TEST_CASE("restrict keeps the third player's dominant action") {
  const Game g = BuildCounterexample(3);
  const InducedGame induced = Restrict(g, 0, MixedStrategy::Pure(0, 0, 2));
  REQUIRE(induced.game.num_players() == 2);
  CHECK(induced.original_players == std::vector<std::size_t>({1, 2}));
  // Induced player 1 is the original third player.
  for (std::size_t other = 0; other < 2; ++other) {
    CHECK(induced.game.payoff(std::vector<std::size_t>{other, 0}, 1) >
          induced.game.payoff(std::vector<std::size_t>{other, 1}, 1));
  }
  const DominanceResult r = IteratedStrictDominance(induced.game);
  CHECK(r.surviving[1] == std::vector<std::size_t>{0});
}

TEST_CASE("counterexample tensors") {
  CHECK(BuildCounterexample(2) == CoordinationCounterexample());
  const Game g = BuildCounterexample(3);
  CHECK(g.num_profiles() == 8);
  for (std::size_t p = 0; p < 8; ++p) {
    const auto a = g.ProfileActions(p);
    CHECK(g.payoff(p, 2) == Rational(a[2] == 0 ? 1 : 0));
    const Game two = CoordinationCounterexample();
    const std::vector<std::size_t> head{a[0], a[1]};
    CHECK(g.payoff(p, 0) == two.payoff(head, 0));
    CHECK(g.payoff(p, 1) == two.payoff(head, 1));
  }
  CHECK_THROWS_AS(BuildCounterexample(1), InputError);
}

TEST_CASE("expected utility is multilinear and restrict is consistent") {
  Xorshift64Star rng(11);
  auto random_mix = [&](std::size_t owner, std::size_t k) {
    std::vector<Rational> w;
    long long total = 0;
    std::vector<long long> raw(k);
    for (auto& r : raw) total += (r = rng.Uniform(1, 5));
    for (auto r : raw) w.emplace_back(r, total);
    return MixedStrategy(owner, w);
  };
  const GeneratorSpec spec{.seed = 9, .max_players = 3, .max_actions = 3};
  for (const Game& g : Generate(spec, 25)) {
    std::vector<MixedStrategy> s;
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      s.push_back(random_mix(i, g.num_actions(i)));
    }
    const Profile p(s);
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      // u_i(s) = sum_a s_i(a) u_i(a, s_-i).
      const auto values = ActionValues(g, i, p.Opponents(i));
      Rational mixed(0);
      for (std::size_t a = 0; a < values.size(); ++a) mixed += s[i][a] * values[a];
      CHECK(mixed == ExpectedUtility(g, p, i));
      // Linear along a segment in player 0's strategy.
      const MixedStrategy other = random_mix(0, g.num_actions(0));
      const Rational t(1, 3);
      std::vector<Rational> blend;
      for (std::size_t a = 0; a < g.num_actions(0); ++a) {
        blend.push_back(t * s[0][a] + (Rational(1) - t) * other[a]);
      }
      const Rational lhs =
          ExpectedUtility(g, p.With(MixedStrategy(0, blend)), i);
      const Rational rhs = t * ExpectedUtility(g, p, i) +
                           (Rational(1) - t) *
                               ExpectedUtility(g, p.With(other), i);
      CHECK(lhs == rhs);
    }
    // Committing then evaluating equals evaluating the full profile.
    const InducedGame induced = Restrict(g, 0, s[0]);
    std::vector<MixedStrategy> rest;
    for (std::size_t k = 0; k < induced.original_players.size(); ++k) {
      rest.push_back(s[induced.original_players[k]].WithOwner(k));
    }
    const Profile q(rest);
    for (std::size_t k = 0; k < rest.size(); ++k) {
      CHECK(ExpectedUtility(induced.game, q, k) ==
            ExpectedUtility(g, p, induced.original_players[k]));
    }
  }
}

TEST_CASE("formatting") {
  const Game g = CoordinationCounterexample();
  CHECK(FormatStrategy(g, MixedStrategy::Pure(0, 1, 2)) == "x2");
  CHECK(FormatStrategy(g, Mix(0, {Rational(2, 3), Rational(1, 3)})) ==
        "(2/3 x1, 1/3 x2)");
  CHECK(FormatProfile(g, Pure(g, {0, 1})) == "(x1, x2)");
}

}  // namespace
}  // namespace marc
