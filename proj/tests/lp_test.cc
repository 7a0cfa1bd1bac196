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
#include <optional>
#include <vector>

#include "doctest.h"
#include "marc/errors.h"
#include "marc/harness.h"
#include "marc/lp.h"

namespace marc {
namespace {

using Vec = std::vector<Rational>;

TEST_CASE("single variable bound") {
  LinearProgram lp;
  lp.objective = {Rational(1)};
  lp.AddConstraint({Rational(1)}, Relation::kLessEqual, Rational(1));
  const LpOutcome out = SolveLp(lp);
  REQUIRE(out.optimal());
  CHECK(out.value == Rational(1));
  CHECK(out.point == Vec{Rational(1)});
}

TEST_CASE("contradictory bounds") {
  LinearProgram lp;
  lp.objective = {Rational(1)};
  lp.AddConstraint({Rational(1)}, Relation::kLessEqual, Rational(1));
  lp.AddConstraint({Rational(1)}, Relation::kGreaterEqual, Rational(2));
  CHECK(SolveLp(lp).status == LpStatus::kInfeasible);

  LinearProgram inverted;
  inverted.objective = {Rational(1)};
  inverted.bounds = {VariableBounds{Rational(2), Rational(1)}};
  CHECK(SolveLp(inverted).status == LpStatus::kInfeasible);
}

TEST_CASE("simplex vertex") {
  LinearProgram lp;
  lp.objective = {Rational(1), Rational(-1)};
  lp.AddConstraint({Rational(1), Rational(1)}, Relation::kEqual, Rational(1));
  const LpOutcome out = SolveLp(lp);
  REQUIRE(out.optimal());
  CHECK(out.value == Rational(1));
  CHECK(out.point == Vec{Rational(1), Rational(0)});
}

TEST_CASE("unbounded and free variables") {
  LinearProgram lp;
  lp.objective = {Rational(1), Rational(0)};
  lp.AddConstraint({Rational(1), Rational(-1)}, Relation::kLessEqual,
                   Rational(3));
  CHECK(SolveLp(lp).status == LpStatus::kUnbounded);

  // max -|x - 5/2| style: maximize -t with t >= x - 5/2, t >= 5/2 - x, x free.
  LinearProgram free_lp;
  free_lp.objective = {Rational(0), Rational(-1)};
  free_lp.bounds = {VariableBounds::Free(), VariableBounds::NonNegative()};
  free_lp.AddConstraint({Rational(1), Rational(-1)}, Relation::kLessEqual,
                        Rational(5, 2));
  free_lp.AddConstraint({Rational(-1), Rational(-1)}, Relation::kLessEqual,
                        Rational(-5, 2));
  const LpOutcome out = SolveLp(free_lp);
  REQUIRE(out.optimal());
  CHECK(out.value == Rational(0));
  CHECK(out.point[0] == Rational(5, 2));

  LinearProgram negative;
  negative.objective = {Rational(-1)};
  negative.bounds = {VariableBounds{Rational(-7, 3), Rational(4)}};
  const LpOutcome n = SolveLp(negative);
  REQUIRE(n.optimal());
  CHECK(n.point[0] == Rational(-7, 3));
}

TEST_CASE("arity mismatch throws") {
  LinearProgram lp;
  lp.objective = {Rational(1), Rational(1)};
  lp.AddConstraint({Rational(1)}, Relation::kLessEqual, Rational(1));
  CHECK_THROWS_AS(SolveLp(lp), InputError);
}

TEST_CASE("redundant equalities and degeneracy") {
  LinearProgram lp;
  lp.objective = {Rational(1), Rational(1), Rational(1)};
  lp.AddConstraint({Rational(1), Rational(1), Rational(0)}, Relation::kEqual,
                   Rational(1));
  lp.AddConstraint({Rational(2), Rational(2), Rational(0)}, Relation::kEqual,
                   Rational(2));
  lp.AddConstraint({Rational(0), Rational(0), Rational(1)},
                   Relation::kLessEqual, Rational(0));
  lp.AddConstraint({Rational(1), Rational(0), Rational(1)},
                   Relation::kLessEqual, Rational(1));
  const LpOutcome out = SolveLp(lp);
  REQUIRE(out.optimal());
  CHECK(out.value == Rational(1));
  CHECK(IsFeasiblePoint(lp, out.point));
}

// Independent oracle: max c.x over {Ax <= b, x >= 0} is attained at a vertex
// when the region is bounded and nonempty. Enumerate every choice of n tight
// rows among the m + n inequalities and solve each square system by Gaussian
// elimination.
std::optional<Vec> SolveSystem(std::vector<Vec> a, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

std::optional<Rational> VertexOracle(const Vec& c, const std::vector<Vec>& a,
                                     const Vec& b) {
  const std::size_t n = c.size();
  const std::size_t m = a.size();
  std::vector<Vec> rows = a;
  Vec rhs = b;
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n, Rational(0));
    e[j] = Rational(-1);
    rows.push_back(e);
    rhs.push_back(Rational(0));
  }
  std::optional<Rational> best;
  const std::size_t total = m + n;
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
    std::vector<Vec> sa;
    Vec sb;
    for (std::size_t r = 0; r < total; ++r) {
      if (mask & (1u << r)) {
        sa.push_back(rows[r]);
        sb.push_back(rhs[r]);
      }
    }
    const auto x = SolveSystem(sa, sb);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t r = 0; r < total && feasible; ++r) {
      Rational lhs(0);
      for (std::size_t j = 0; j < n; ++j) lhs += rows[r][j] * (*x)[j];
      feasible = lhs <= rhs[r];
    }
    if (!feasible) continue;
    Rational v(0);
    for (std::size_t j = 0; j < n; ++j) v += c[j] * (*x)[j];
    if (!best || v > *best) best = v;
  }
  return best;
}

TEST_CASE("random programs agree with vertex enumeration") {
  Xorshift64Star rng(77);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.Uniform(1, 4));
    const auto m = static_cast<std::size_t>(rng.Uniform(1, 6 - 0));
    Vec c;
    for (std::size_t j = 0; j < n; ++j) c.emplace_back(rng.Uniform(-4, 4));
    std::vector<Vec> a;
    Vec b;
    for (std::size_t r = 0; r < m; ++r) {
      Vec row;
      for (std::size_t j = 0; j < n; ++j) row.emplace_back(rng.Uniform(-3, 3));
      a.push_back(row);
      b.emplace_back(rng.Uniform(-2, 6));
    }
    // Box rows keep the region bounded.
    for (std::size_t j = 0; j < n && a.size() < 6 + n; ++j) {
      Vec row(n, Rational(0));
      row[j] = Rational(1);
      a.push_back(row);
      b.emplace_back(rng.Uniform(1, 5));
    }
    LinearProgram lp;
    lp.objective = c;
    for (std::size_t r = 0; r < a.size(); ++r) {
      lp.AddConstraint(a[r], Relation::kLessEqual, b[r]);
    }
    const LpOutcome out = SolveLp(lp);
    const auto oracle = VertexOracle(c, a, b);
    CAPTURE(trial);
    if (oracle) {
      REQUIRE(out.optimal());
      CHECK(out.value == *oracle);
      CHECK(IsFeasiblePoint(lp, out.point));
      ++optimal;
    } else {
      CHECK(out.status == LpStatus::kInfeasible);
      ++infeasible;
    }
  }
  CHECK(optimal > 50);
  CHECK(infeasible > 5);
}

TEST_CASE("strong duality on random programs") {
  // max c.x, Ax <= b, x >= 0  versus  min b.y, A^T y >= c, y >= 0.
  Xorshift64Star rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.Uniform(1, 4));
    const auto m = static_cast<std::size_t>(rng.Uniform(1, 5));
    std::vector<Vec> a(m);
    Vec b, c;
    for (auto& row : a) {
      for (std::size_t j = 0; j < n; ++j) row.emplace_back(rng.Uniform(-2, 4));
    }
    for (std::size_t r = 0; r < m; ++r) b.emplace_back(rng.Uniform(0, 6));
    for (std::size_t j = 0; j < n; ++j) c.emplace_back(rng.Uniform(-3, 5));
    LinearProgram primal;
    primal.objective = c;
    for (std::size_t r = 0; r < m; ++r) {
      primal.AddConstraint(a[r], Relation::kLessEqual, b[r]);
    }
    LinearProgram dual;
    for (const auto& v : b) dual.objective.push_back(-v);
    for (std::size_t j = 0; j < n; ++j) {
      Vec col;
      for (std::size_t r = 0; r < m; ++r) col.push_back(a[r][j]);
      dual.AddConstraint(col, Relation::kGreaterEqual, c[j]);
    }
    const LpOutcome p = SolveLp(primal);
    const LpOutcome d = SolveLp(dual);
    CAPTURE(trial);
    // b >= 0 makes the primal feasible, so it is either optimal or unbounded.
    REQUIRE(p.status != LpStatus::kInfeasible);
    if (p.optimal()) {
      REQUIRE(d.optimal());
      CHECK(p.value == -d.value);
      ++checked;
    } else {
      CHECK(d.status == LpStatus::kInfeasible);
    }
  }
  CHECK(checked > 50);
}

}  // namespace
}  // namespace marc
