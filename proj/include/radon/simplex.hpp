// Copyright 2026 The RadonKit Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "radon/error.hpp"
#include "radon/linalg.hpp"
#include "radon/rational.hpp"

namespace radon {

/// Equality constraints a x = b over nonnegative variables x >= 0.
struct FeasibilitySystem {
  Matrix a;
  std::vector<Rational> b;

  std::size_t rows() const { return a.size(); }
  std::size_t vars() const { return a.empty() ? 0 : a[0].size(); }

  void validate() const {
    if (a.size() != b.size())
      throw InvalidInputError("constraint matrix and right-hand side disagree on row count");
    for (const auto& row : a)
      if (row.size() != vars()) throw InvalidInputError("ragged constraint matrix");
  }
};

enum class LpSense { kMinimize, kMaximize };

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;                  // objective at the optimum, kOptimal only
  std::vector<Rational> solution;  // basic (vertex) solution, kOptimal only
};

/// Exact two-phase simplex over rationals with Bland's anti-cycling rule.
/// Pivoting is fully deterministic, so every result is reproducible.
/// One instance amortizes phase 1 across several objectives: call
/// feasible() once, then optimize() as often as needed; each optimize
/// warm-starts from the current basis.
class SimplexSolver {
 public:
  explicit SimplexSolver(const FeasibilitySystem& sys) : num_real_(sys.vars()) {
    sys.validate();
    const std::size_t m = sys.rows();
    rows_.reserve(m);
    basis_.reserve(m);
    // One artificial per row; rows with negative rhs are negated first.
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(num_real_ + m + 1, Rational(0));
      const bool neg = sys.b[i] < 0;
      for (std::size_t j = 0; j < num_real_; ++j) row[j] = neg ? -sys.a[i][j] : sys.a[i][j];
      row[num_real_ + i] = 1;
      row.back() = neg ? -sys.b[i] : sys.b[i];
      rows_.push_back(std::move(row));
      basis_.push_back(num_real_ + i);
    }
    dead_.assign(num_real_ + m, false);
    feasible_ = run_phase1();
  }

  bool feasible() const { return feasible_; }

  /// Basic feasible solution over the real variables; empty optional when
  /// the system is infeasible.
  std::optional<std::vector<Rational>> solution() const {
    if (!feasible_) return std::nullopt;
    return extract();
  }

  /// Optimizes the given objective over the feasible region. Requires the
  /// objective to have one entry per real variable.
  LpResult optimize(const std::vector<Rational>& objective, LpSense sense) {
    if (objective.size() != num_real_)
      throw InvalidInputError("objective length does not match variable count");
    if (!feasible_) return {LpStatus::kInfeasible, Rational(0), {}};
    std::vector<Rational> c = objective;
    if (sense == LpSense::kMaximize)
      for (Rational& q : c) q = -q;
    // Reduced costs and objective value for the current basis.
    cost_.assign(num_real_, Rational(0));
    cost_rhs_ = 0;
    for (std::size_t j = 0; j < num_real_; ++j) cost_[j] = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = c_at(c, basis_[i]);
      if (cb == 0) continue;
      for (std::size_t j = 0; j < num_real_; ++j)
        if (rows_[i][j] != 0) cost_[j] -= cb * rows_[i][j];
      cost_rhs_ += cb * rows_[i].back();
    }
    if (!pivot_to_optimum(num_real_))
      return {LpStatus::kUnbounded, Rational(0), {}};
    Rational value = cost_rhs_;
    if (sense == LpSense::kMaximize) value = -value;
    return {LpStatus::kOptimal, std::move(value), extract()};
  }

 private:
  static const Rational& c_at(const std::vector<Rational>& c, std::size_t var) {
    static const Rational kZero(0);
    return var < c.size() ? c[var] : kZero;
  }

  std::size_t col_count() const { return dead_.size(); }

  std::vector<Rational> extract() const {
    std::vector<Rational> x(num_real_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < num_real_) x[basis_[i]] = rows_[i].back();
    return x;
  }

  void pivot(std::size_t r, std::size_t e) {
    std::vector<Rational>& prow = rows_[r];
    const Rational inv = Rational(1) / prow[e];
    if (inv != 1)
      for (Rational& q : prow) q *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][e] == 0) continue;
      const Rational f = rows_[i][e];
      std::vector<Rational>& row = rows_[i];
      for (std::size_t j = 0; j < row.size(); ++j)
        if (prow[j] != 0) row[j] -= f * prow[j];
      row[e] = 0;
    }
    if (cost_[e] != 0) {
      const Rational f = cost_[e];
      for (std::size_t j = 0; j < cost_.size(); ++j)
        if (prow[j] != 0) cost_[j] -= f * prow[j];
      // cost_rhs_ tracks the objective value itself (not the negated
      // tableau cell): entering at value prow.back() moves z by f * t.
      cost_rhs_ += f * prow.back();
      cost_[e] = 0;
    }
    if (basis_[r] >= num_real_) dead_[basis_[r]] = true;  // artificials never re-enter
    basis_[r] = e;
  }

  /// Bland's rule: entering variable is the lowest-index live column with
  /// a negative reduced cost; leaving row is the ratio-test minimizer with
  /// the lowest basis index. Returns false on unboundedness.
  bool pivot_to_optimum(std::size_t usable_cols) {
    while (true) {
      std::size_t e = usable_cols;
      for (std::size_t j = 0; j < usable_cols; ++j)
        if (!dead_[j] && cost_[j] < 0) {
          e = j;
          break;
        }
      if (e == usable_cols) return true;  // optimal
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][e] <= 0) continue;
        Rational ratio = rows_[i].back() / rows_[i][e];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return false;  // unbounded
      pivot(leave, e);
    }
  }

  bool run_phase1() {
    // min sum of artificials: reduced cost of column j is -sum of its
    // entries across rows (artificial columns start basic with cost 0).
    cost_.assign(col_count(), Rational(0));
    cost_rhs_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < num_real_; ++j) cost_[j] -= rows_[i][j];
      cost_rhs_ += rows_[i].back();
    }
    if (!pivot_to_optimum(num_real_)) throw Error("phase-1 objective cannot be unbounded");
    if (cost_rhs_ != 0) return false;  // infeasible
    // Drive leftover zero-valued artificials out of the basis; a row with
    // no live real entry is redundant and gets dropped.
    for (std::size_t i = rows_.size(); i-- > 0;) {
      if (basis_[i] < num_real_) continue;
      std::size_t e = num_real_;
      for (std::size_t j = 0; j < num_real_; ++j)
        if (!dead_[j] && rows_[i][j] != 0) {
          e = j;
          break;
        }
      if (e < num_real_) {
        pivot(i, e);
      } else {
        dead_[basis_[i]] = true;
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    return true;
  }

  std::size_t num_real_;
  Matrix rows_;                      // tableau rows, rhs in the last column
  std::vector<std::size_t> basis_;   // basis_[i] = variable basic in row i
  std::vector<bool> dead_;           // columns barred from entering
  std::vector<Rational> cost_;       // reduced costs of the active objective
  Rational cost_rhs_;                // objective value at the current basis
  bool feasible_ = false;
};

/// Vertex solution of {a x = b, x >= 0}, or absent when infeasible.
inline std::optional<std::vector<Rational>> lp_feasible(const FeasibilitySystem& sys) {
  return SimplexSolver(sys).solution();
}

/// Exact optimum of a linear objective over {a x = b, x >= 0}.
inline LpResult lp_optimize(const FeasibilitySystem& sys, const std::vector<Rational>& objective,
                            LpSense sense) {
  SimplexSolver solver(sys);
  return solver.optimize(objective, sense);
}

}  // namespace radon
