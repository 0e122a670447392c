// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "crnet/rational.hpp"

namespace crnet {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// maximize objective . x  subject to  rows . x = rhs,  x >= 0.
struct LpProblem {
  std::size_t num_vars = 0;
  RationalMatrix rows;
  RationalVector rhs;
  RationalVector objective;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  /// Primal values (Optimal only), length num_vars; a basic solution.
  RationalVector x;
  Rational objective_value = 0;
  /// Row multipliers, one per constraint.
  /// Optimal: y with y . A_j >= c_j for every column j and y . rhs = optimum.
  /// Infeasible: Farkas certificate with y . A_j >= 0 for every column j
  /// and y . rhs < 0.
  RationalVector dual;
};

/// Exact two-phase tableau simplex with Bland's anti-cycling rule.
/// Deterministic; no tolerances.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace crnet
