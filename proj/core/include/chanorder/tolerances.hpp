#ifndef CHANORDER_TOLERANCES_HPP
#define CHANORDER_TOLERANCES_HPP

#include <stdexcept>

namespace chanorder {

/// Numerical tolerances shared by the LP kernel and the geometry layer.
struct ToleranceConfig {
  double feasibility_tol = 1e-9;   // constraint residuals, LP optimality
  double dedup_tol = 1e-9;         // L1 threshold for collapsing duplicate points
  double certificate_tol = 1e-7;   // slack allowed when checking certificates

  void check() const {
    if (!(feasibility_tol > 0.0) || !(dedup_tol > 0.0) || !(certificate_tol > 0.0)) {
      throw std::invalid_argument("ToleranceConfig: all tolerances must be strictly positive");
    }
  }
};

}  // namespace chanorder

#endif  // CHANORDER_TOLERANCES_HPP
