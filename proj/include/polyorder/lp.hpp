#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "polyorder/rational.hpp"

namespace polyorder {

enum class VarSign { NonNegative, Free };

/// Linear program in equality form: A x = b, per-variable sign constraints,
/// optional objective (minimized).
struct LPProblem {
  QMat A;
  QVec b;
  std::vector<VarSign> signs;
  std::optional<QVec> objective;

  static LPProblem feasibility(QMat A, QVec b, std::vector<VarSign> signs) {
    return LPProblem{std::move(A), std::move(b), std::move(signs), std::nullopt};
  }
  static LPProblem minimize(QMat A, QVec b, std::vector<VarSign> signs, QVec c) {
    return LPProblem{std::move(A), std::move(b), std::move(signs), std::move(c)};
  }
};

/// Either an exact feasible (optimal, when an objective is present) solution
/// or an exact Farkas infeasibility certificate y with
///   yT A >= 0 on nonnegative columns, yT A = 0 on free columns, yT b < 0.
struct LPOutcome {
  bool feasible = false;
  QVec solution;                          // when feasible
  std::optional<Rational> objective_value;  // when feasible and objective given
  QVec farkas;                            // when infeasible

  explicit operator bool() const { return feasible; }
};

/// Raised when the objective is unbounded below on the feasible region.
struct LpUnboundedError : std::runtime_error {
  explicit LpUnboundedError(const char* what) : std::runtime_error(what) {}
};

/// Exact primal simplex with Bland's rule; deterministic for a fixed input.
LPOutcome lp_solve(const LPProblem& problem);

/// Exact validation of an outcome against its problem (used by tests and
/// enforced internally before returning).
bool lp_outcome_consistent(const LPProblem& problem, const LPOutcome& out);

}  // namespace polyorder
