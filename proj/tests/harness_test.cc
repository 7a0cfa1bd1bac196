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
#include "marc/equilibrium.h"
#include "marc/errors.h"
#include "marc/harness.h"

namespace marc {
namespace {

TEST_CASE("xorshift64* reference values") {
  // Outputs of an independent arbitrary-precision implementation.
  Xorshift64Star zero(0);
  CHECK(zero.Next() == 0x0d83b3e29a21487aULL);
  CHECK(zero.Next() == 0x54c44c79f1fe9d67ULL);
  CHECK(zero.Next() == 0xa845f342007a0e78ULL);
  Xorshift64Star fixed(20240601);
  CHECK(fixed.Next() == 0xbc395afaecda6ec7ULL);
  CHECK(fixed.Next() == 0x161e369735d3ff70ULL);
  // A seed equal to the mixing constant would zero the state.
  Xorshift64Star degenerate(0x9E3779B97F4A7C15ULL);
  CHECK(degenerate.Next() == 0x0d83b3e29a21487aULL);
  Xorshift64Star r(5);
  for (int k = 0; k < 1000; ++k) {
    const auto v = r.Uniform(-3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
  }
}

TEST_CASE("generation is deterministic") {
  const GeneratorSpec spec{.seed = 77, .max_players = 3};
  CHECK(Generate(spec, 30) == Generate(spec, 30));
  GeneratorSpec other = spec;
  other.seed = 78;
  CHECK(Generate(spec, 30) != Generate(other, 30));
}

TEST_CASE("generated games respect the spec") {
  const GeneratorSpec spec{.seed = 2, .min_players = 2, .max_players = 4,
                           .min_actions = 1, .max_actions = 3,
                           .payoff_lo = -2, .payoff_hi = 2};
  for (const Game& g : Generate(spec, 50)) {
    CHECK(g.num_players() >= 2);
    CHECK(g.num_players() <= 4);
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      CHECK(g.num_actions(i) >= 1);
      CHECK(g.num_actions(i) <= 3);
    }
    for (const Rational& v : g.payoff_tensor()) {
      CHECK(v.is_integer());
      CHECK(v >= Rational(-2));
      CHECK(v <= Rational(2));
    }
  }
}

TEST_CASE("zero-sum class") {
  GeneratorSpec spec{.seed = 4, .max_players = 4,
                     .game_class = GameClass::kZeroSum};
  for (const Game& g : Generate(spec, 50)) CHECK(IsZeroSum(g));
}

TEST_CASE("strictly dominant class reduces in one round per player") {
  GeneratorSpec spec{.seed = 6, .max_players = 3, .max_actions = 4,
                     .game_class = GameClass::kStrictlyDominant};
  for (const Game& g : Generate(spec, 40)) {
    const DominanceResult r = IteratedStrictDominance(g);
    CHECK(r.reduced.num_profiles() == 1);
    // Each dominated action is beaten by the same pure action.
    for (const auto& e : r.trace) {
      CHECK(e.dominator.PureAction() == r.surviving[e.player][0]);
    }
  }
}

TEST_CASE("bad specs and suite names") {
  CHECK_THROWS_AS(Generate(GeneratorSpec{.min_players = 3, .max_players = 2}, 1),
                  InputError);
  CHECK_THROWS_AS(Generate(GeneratorSpec{.payoff_lo = 1, .payoff_hi = 0}, 1),
                  InputError);
  CHECK_THROWS_AS(RunSuite("no-such-suite", GeneratorSpec{}, 1), InputError);
  CHECK_THROWS_AS(DefaultSpec("no-such-suite"), InputError);
}

TEST_CASE("every suite passes a short run with nontrivial instances") {
  for (const std::string& name : SuiteNames()) {
    CAPTURE(name);
    const SuiteReport r = RunSuite(name, DefaultSpec(name), 12);
    CHECK(r.count == 12);
    CHECK(r.passed == 12);
    CHECK(r.nontrivial > 0);
    CHECK(r.ok());
    for (std::size_t k = 0; k < r.trials.size(); ++k) {
      CHECK(r.trials[k].index == k);
    }
  }
}

TEST_CASE("suite reports are reproducible") {
  for (const std::string& name : {std::string("remark1-biconditional"),
                                  std::string("mode-ordering")}) {
    const SuiteReport a = RunSuite(name, DefaultSpec(name), 10);
    const SuiteReport b = RunSuite(name, DefaultSpec(name), 10);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t k = 0; k < a.trials.size(); ++k) {
      CHECK(a.trials[k].detail == b.trials[k].detail);
      CHECK(a.trials[k].nontrivial == b.trials[k].nontrivial);
    }
  }
}

}  // namespace
}  // namespace marc
