#ifndef CHANORDER_LP_HPP
#define CHANORDER_LP_HPP

#include <vector>

#include "chanorder/tolerances.hpp"

namespace chanorder {

enum class LpSense { kMinimize, kMaximize };

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kOptimal;
  /// Optimal value in the requested sense (valid when status == kOptimal).
  double objective = 0.0;
  /// Primal solution, one entry per original variable (kOptimal only).
  std::vector<double> solution;
  /// Farkas infeasibility certificate y over the constraint rows
  /// (kInfeasible only): y'A <= 0 componentwise on the nonnegative
  /// variables, y'A = 0 on the free ones, and y'b > 0.
  std::vector<double> farkas;
};

/// Dense two-phase simplex for
///     optimize  objective . x
///     s.t.      eq_lhs x = eq_rhs,   x_i >= 0 whenever nonneg[i].
///
/// Free variables are split internally; Bland's rule is used throughout, so
/// the pivot sequence (and hence the returned basic solution) is
/// deterministic. Infeasible problems come back with the phase-1 dual as a
/// Farkas certificate. A numerically degenerate pivot column is reported via
/// std::runtime_error rather than silently producing a wrong answer.
LpResult solve_lp(const std::vector<double>& objective,
                  const std::vector<std::vector<double>>& eq_lhs,
                  const std::vector<double>& eq_rhs,
                  const std::vector<bool>& nonneg,
                  LpSense sense,
                  const ToleranceConfig& tol = {});

/// Convenience overload: all variables nonnegative.
LpResult solve_lp(const std::vector<double>& objective,
                  const std::vector<std::vector<double>>& eq_lhs,
                  const std::vector<double>& eq_rhs,
                  LpSense sense,
                  const ToleranceConfig& tol = {});

}  // namespace chanorder

#endif  // CHANORDER_LP_HPP
