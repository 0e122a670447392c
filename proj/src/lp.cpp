// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/lp.hpp"

#include <cstddef>
#include <vector>

#include "crnet/errors.hpp"

namespace crnet {
namespace {

// Dense tableau over the rationals. Columns 0..n-1 are the structural
// variables, columns n..n+m-1 the artificials, column n+m the right-hand
// side. Artificial columns never re-enter the basis once they leave it.
struct Tableau {
  std::size_t n = 0;      // structural columns
  std::size_t m = 0;      // live rows
  std::size_t cols = 0;   // n + original row count + 1
  RationalMatrix t;       // m rows, cols columns
  std::vector<std::size_t> basis;     // per live row
  std::vector<std::size_t> orig_row;  // live row -> original row index
  RationalVector z;                   // reduced costs, one per column
  Rational value = 0;                 // current objective value

  std::size_t rhs_col() const { return cols - 1; }

  void pivot(std::size_t row, std::size_t col) {
    RationalVector& pr = t[row];
    const Rational piv = pr[col];
    if (piv == 0) {
      throw Error(ErrorCode::InternalInvariantBroken, "zero pivot");
    }
    if (piv != 1) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (pr[j] != 0) pr[j] /= piv;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      const Rational factor = t[i][col];
      if (factor == 0) continue;
      RationalVector& ri = t[i];
      for (std::size_t j = 0; j < cols; ++j) {
        if (pr[j] != 0) ri[j] -= factor * pr[j];
      }
    }
    const Rational zf = z[col];
    if (zf != 0) {
      value += zf * pr[cols - 1];
      for (std::size_t j = 0; j < cols; ++j) {
        if (pr[j] != 0) z[j] -= zf * pr[j];
      }
    }
    basis[row] = col;
  }

  // Bland's rule over structural columns only. Returns false when optimal,
  // throws on unboundedness if allow_unbounded is false.
  bool step(LpSolution* unbounded_out) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (z[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == n) return false;

    const std::size_t rc = rhs_col();
    bool found = false;
    std::size_t leave = 0;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][rc] / t[i][enter];
      if (!found || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        found = true;
        leave = i;
        best_ratio = ratio;
      }
    }
    if (!found) {
      if (unbounded_out == nullptr) {
        throw Error(ErrorCode::InternalInvariantBroken,
                    "unbounded auxiliary program");
      }
      unbounded_out->status = LpStatus::Unbounded;
      return false;
    }
    pivot(leave, enter);
    return true;
  }

  void reset_costs(const RationalVector& cost) {
    z.assign(cols, 0);
    for (std::size_t j = 0; j + 1 < cols; ++j) z[j] = cost[j];
    value = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational cb = cost[basis[i]];
      if (cb == 0) continue;
      value += cb * t[i][rhs_col()];
      for (std::size_t j = 0; j < cols; ++j) {
        if (t[i][j] != 0) z[j] -= cb * t[i][j];
      }
    }
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const std::size_t n = problem.num_vars;
  const std::size_t m0 = problem.rows.size();
  if (problem.rhs.size() != m0 || problem.objective.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "inconsistent program shape");
  }
  for (const RationalVector& row : problem.rows) {
    if (row.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "inconsistent program shape");
    }
  }

  Tableau tab;
  tab.n = n;
  tab.m = m0;
  tab.cols = n + m0 + 1;
  tab.t.assign(m0, RationalVector(n + m0 + 1, 0));
  tab.basis.resize(m0);
  tab.orig_row.resize(m0);
  std::vector<int> row_sign(m0, 1);
  for (std::size_t i = 0; i < m0; ++i) {
    const bool flip = problem.rhs[i] < 0;
    row_sign[i] = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      tab.t[i][j] = flip ? -problem.rows[i][j] : problem.rows[i][j];
    }
    tab.t[i][n + i] = 1;
    tab.t[i][n + m0] = flip ? -problem.rhs[i] : problem.rhs[i];
    tab.basis[i] = n + i;
    tab.orig_row[i] = i;
  }

  LpSolution sol;

  // Phase 1: maximize minus the sum of the artificials.
  RationalVector phase1_cost(n + m0, 0);
  for (std::size_t i = 0; i < m0; ++i) phase1_cost[n + i] = -1;
  tab.reset_costs(phase1_cost);
  while (tab.step(nullptr)) {
  }
  if (tab.value < 0) {
    sol.status = LpStatus::Infeasible;
    sol.dual.assign(m0, 0);
    for (std::size_t i = 0; i < tab.m; ++i) {
      const std::size_t orig = tab.orig_row[i];
      sol.dual[orig] = Rational(-1) - tab.z[n + orig];
      if (row_sign[orig] < 0) sol.dual[orig] = -sol.dual[orig];
    }
    return sol;
  }

  // Drive any remaining artificials out of the basis; a row whose artificial
  // cannot be replaced is redundant and gets dropped (its multiplier is 0).
  for (std::size_t i = tab.m; i-- > 0;) {
    if (tab.basis[i] < n) continue;
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab.t[i][j] != 0) {
        enter = j;
        break;
      }
    }
    if (enter < n) {
      tab.pivot(i, enter);
    } else {
      if (tab.t[i][tab.rhs_col()] != 0) {
        throw Error(ErrorCode::InternalInvariantBroken,
                    "redundant row with nonzero residual");
      }
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      tab.orig_row.erase(tab.orig_row.begin() +
                         static_cast<std::ptrdiff_t>(i));
      --tab.m;
    }
  }

  // Phase 2: the real objective, artificials costed at zero.
  RationalVector phase2_cost(n + m0, 0);
  for (std::size_t j = 0; j < n; ++j) phase2_cost[j] = problem.objective[j];
  tab.reset_costs(phase2_cost);
  sol.status = LpStatus::Optimal;
  while (tab.step(&sol)) {
  }
  if (sol.status == LpStatus::Unbounded) return sol;

  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < tab.m; ++i) {
    if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.t[i][tab.rhs_col()];
  }
  sol.objective_value = tab.value;
  sol.dual.assign(m0, 0);
  for (std::size_t i = 0; i < tab.m; ++i) {
    const std::size_t orig = tab.orig_row[i];
    sol.dual[orig] = -tab.z[n + orig];
    if (row_sign[orig] < 0) sol.dual[orig] = -sol.dual[orig];
  }
  return sol;
}

}  // namespace crnet
