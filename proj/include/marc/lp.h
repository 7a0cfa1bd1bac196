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

#ifndef MARC_LP_H_
#define MARC_LP_H_

#include <optional>
#include <string>
#include <vector>

#include "marc/rational.h"

namespace marc {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// A missing bound means unbounded in that direction.
struct VariableBounds {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;

  static VariableBounds Free() { return {std::nullopt, std::nullopt}; }
  static VariableBounds NonNegative() { return {}; }
};

// maximize objective . x subject to constraints and bounds. An empty `bounds`
// vector means every variable is nonnegative.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<VariableBounds> bounds;

  std::size_t num_variables() const { return objective.size(); }

  void AddConstraint(std::vector<Rational> coefficients, Relation relation,
                     Rational rhs) {
    constraints.push_back(
        {std::move(coefficients), relation, std::move(rhs)});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;               // valid when kOptimal
  std::vector<Rational> point;  // valid when kOptimal

  bool optimal() const { return status == LpStatus::kOptimal; }
};

// Two-phase dense simplex over the rationals. Entering and leaving variables
// are chosen by lowest index among eligible candidates (Bland), so the method
// terminates on degenerate programs. An optimal outcome is a basic solution,
// re-checked exactly against every constraint before it is returned.
//
// Inverted bounds (lower > upper) report kInfeasible. Throws InputError on
// arity mismatch.
LpOutcome SolveLp(const LinearProgram& lp);

// True iff `point` satisfies every constraint and bound of `lp` exactly.
bool IsFeasiblePoint(const LinearProgram& lp,
                     const std::vector<Rational>& point);

}  // namespace marc

#endif  // MARC_LP_H_
