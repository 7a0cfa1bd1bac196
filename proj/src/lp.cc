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

#include "marc/lp.h"

#include <cstddef>
#include <utility>

#include "marc/errors.h"

namespace marc {

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// x_original = offset + sum(coef * y[column]) with every y >= 0.
struct Substitution {
  Rational offset;
  std::vector<std::pair<std::size_t, Rational>> terms;
};

struct StandardRow {
  std::vector<Rational> coefficients;  // over y
  Relation relation;
  Rational rhs;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : columns_(columns),
        cells_(rows, std::vector<Rational>(columns + 1)),
        objective_(columns + 1),
        basis_(rows) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t columns() const { return columns_; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][columns_]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }

  // Installs reduced costs for "maximize cost . y" given the current basis.
  void SetObjective(const std::vector<Rational>& cost) {
    for (std::size_t c = 0; c <= columns_; ++c) {
      Rational v = c < columns_ ? -cost[c] : Rational(0);
      for (std::size_t r = 0; r < rows(); ++r) {
        const Rational& cb = cost[basis_[r]];
        if (!cb.is_zero() && !cells_[r][c].is_zero()) v += cb * cells_[r][c];
      }
      objective_[c] = std::move(v);
    }
  }

  const Rational& objective_value() const { return objective_[columns_]; }

  void Pivot(std::size_t pr, std::size_t pc) {
    const Rational pivot = cells_[pr][pc];
    for (auto& v : cells_[pr]) {
      if (!v.is_zero()) v /= pivot;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      const Rational factor = row[pc];
      if (factor.is_zero()) return;
      for (std::size_t c = 0; c <= columns_; ++c) {
        if (!cells_[pr][c].is_zero()) row[c] -= factor * cells_[pr][c];
      }
    };
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r != pr) eliminate(cells_[r]);
    }
    eliminate(objective_);
    basis_[pr] = pc;
  }

  // Runs Bland-rule simplex over columns [0, allowed). Returns false when the
  // objective is unbounded.
  bool Optimize(std::size_t allowed) {
    while (true) {
      std::size_t entering = allowed;
      for (std::size_t c = 0; c < allowed; ++c) {
        if (objective_[c].sign() < 0) {
          entering = c;
          break;
        }
      }
      if (entering == allowed) return true;

      std::size_t leaving = rows();
      Rational best_ratio;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (cells_[r][entering].sign() <= 0) continue;
        Rational ratio = cells_[r][columns_] / cells_[r][entering];
        if (leaving == rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows()) return false;
      Pivot(leaving, entering);
    }
  }

  void RemoveRow(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::size_t columns_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> basis_;
};

Rational Dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
  }
  return sum;
}

bool Satisfies(const Rational& lhs, Relation relation, const Rational& rhs) {
  switch (relation) {
    case Relation::kLessEqual:
      return lhs <= rhs;
    case Relation::kEqual:
      return lhs == rhs;
    case Relation::kGreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

void Validate(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (lp.constraints[i].coefficients.size() != n) {
      throw InputError("constraint " + std::to_string(i) + " has " +
                       std::to_string(lp.constraints[i].coefficients.size()) +
                       " coefficients, objective has " + std::to_string(n));
    }
  }
  if (!lp.bounds.empty() && lp.bounds.size() != n) {
    throw InputError("bounds vector has " + std::to_string(lp.bounds.size()) +
                     " entries, objective has " + std::to_string(n));
  }
}

}  // namespace

bool IsFeasiblePoint(const LinearProgram& lp,
                     const std::vector<Rational>& point) {
  if (point.size() != lp.num_variables()) return false;
  for (const auto& c : lp.constraints) {
    if (!Satisfies(Dot(c.coefficients, point), c.relation, c.rhs)) return false;
  }
  for (std::size_t i = 0; i < lp.bounds.size(); ++i) {
    const auto& b = lp.bounds[i];
    if (b.lower && point[i] < *b.lower) return false;
    if (b.upper && point[i] > *b.upper) return false;
  }
  if (lp.bounds.empty()) {
    for (const auto& v : point) {
      if (v.sign() < 0) return false;
    }
  }
  return true;
}

LpOutcome SolveLp(const LinearProgram& lp) {
  Validate(lp);
  const std::size_t n = lp.num_variables();

  // Rewrite every original variable over nonnegative columns.
  std::vector<Substitution> subst(n);
  std::vector<StandardRow> rows;
  std::size_t y_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const VariableBounds b =
        lp.bounds.empty() ? VariableBounds::NonNegative() : lp.bounds[i];
    if (b.lower && b.upper && *b.lower > *b.upper) return {};
    if (b.lower) {
      subst[i].offset = *b.lower;
      subst[i].terms.push_back({y_count, Rational(1)});
      if (b.upper) {
        rows.push_back({{}, Relation::kLessEqual, *b.upper - *b.lower});
        rows.back().coefficients.resize(y_count + 1);
        rows.back().coefficients[y_count] = 1;
      }
      ++y_count;
    } else if (b.upper) {
      subst[i].offset = *b.upper;
      subst[i].terms.push_back({y_count++, Rational(-1)});
    } else {
      subst[i].terms.push_back({y_count++, Rational(1)});
      subst[i].terms.push_back({y_count++, Rational(-1)});
    }
  }
  for (auto& row : rows) row.coefficients.resize(y_count);
  for (const auto& c : lp.constraints) {
    StandardRow row{std::vector<Rational>(y_count), c.relation, c.rhs};
    for (std::size_t i = 0; i < n; ++i) {
      if (c.coefficients[i].is_zero()) continue;
      row.rhs -= c.coefficients[i] * subst[i].offset;
      for (const auto& [col, coef] : subst[i].terms) {
        row.coefficients[col] += c.coefficients[i] * coef;
      }
    }
    rows.push_back(std::move(row));
  }
  std::vector<Rational> cost(y_count);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [col, coef] : subst[i].terms) {
      cost[col] += lp.objective[i] * coef;
    }
  }

  // Nonnegative right-hand sides.
  for (auto& row : rows) {
    if (row.rhs.sign() < 0) {
      row.rhs = -row.rhs;
      for (auto& v : row.coefficients) v = -v;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
  }

  // Column layout: structural y, then slack/surplus, then artificials.
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::kEqual) ++slack_count;
    if (row.relation != Relation::kLessEqual) ++artificial_count;
  }
  const std::size_t real_columns = y_count + slack_count;
  const std::size_t total_columns = real_columns + artificial_count;
  Tableau tableau(rows.size(), total_columns);
  std::size_t next_slack = y_count;
  std::size_t next_artificial = real_columns;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < y_count; ++c) {
      tableau.at(r, c) = rows[r].coefficients[c];
    }
    tableau.rhs(r) = rows[r].rhs;
    switch (rows[r].relation) {
      case Relation::kLessEqual:
        tableau.at(r, next_slack) = 1;
        tableau.basis(r) = next_slack++;
        break;
      case Relation::kGreaterEqual:
        tableau.at(r, next_slack++) = -1;
        tableau.at(r, next_artificial) = 1;
        tableau.basis(r) = next_artificial++;
        break;
      case Relation::kEqual:
        tableau.at(r, next_artificial) = 1;
        tableau.basis(r) = next_artificial++;
        break;
    }
  }

  if (artificial_count > 0) {
    std::vector<Rational> phase_one(total_columns);
    for (std::size_t c = real_columns; c < total_columns; ++c) phase_one[c] = -1;
    tableau.SetObjective(phase_one);
    tableau.Optimize(total_columns);  // bounded below by zero
    if (tableau.objective_value().sign() != 0) return {};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t r = tableau.rows(); r-- > 0;) {
      if (tableau.basis(r) < real_columns) continue;
      std::size_t replacement = real_columns;
      for (std::size_t c = 0; c < real_columns; ++c) {
        if (!tableau.at(r, c).is_zero()) {
          replacement = c;
          break;
        }
      }
      if (replacement == real_columns) {
        tableau.RemoveRow(r);
      } else {
        tableau.Pivot(r, replacement);
      }
    }
  }

  std::vector<Rational> phase_two(total_columns);
  for (std::size_t c = 0; c < y_count; ++c) phase_two[c] = cost[c];
  tableau.SetObjective(phase_two);
  if (!tableau.Optimize(real_columns)) {
    return {LpStatus::kUnbounded, Rational(), {}};
  }

  std::vector<Rational> y(total_columns);
  for (std::size_t r = 0; r < tableau.rows(); ++r) {
    y[tableau.basis(r)] = tableau.rhs(r);
  }
  LpOutcome out{LpStatus::kOptimal, Rational(), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = subst[i].offset;
    for (const auto& [col, coef] : subst[i].terms) {
      if (!y[col].is_zero()) x += coef * y[col];
    }
    out.point[i] = std::move(x);
  }
  out.value = Dot(lp.objective, out.point);
  if (!IsFeasiblePoint(lp, out.point)) {
    throw InternalError("simplex returned a point violating a constraint");
  }
  return out;
}

}  // namespace marc
