#include "chanorder/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>

namespace chanorder {

namespace {

constexpr double kPivotTol = 1e-11;

// Full-tableau simplex over the row-major array `t` (stride = width,
// rhs in the last column). Minimization; Bland's rule for both the entering
// column (lowest eligible index) and the leaving row (lowest basic index
// among minimum-ratio ties), which rules out cycling.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows * (cols + 1), 0.0) {}

  double& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * (cols_ + 1) + j]; }
  double& rhs(std::size_t i) { return t_[i * (cols_ + 1) + cols_]; }
  double rhs(std::size_t i) const { return t_[i * (cols_ + 1) + cols_]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t prow, std::size_t pcol) {
    const double piv = at(prow, pcol);
    if (std::abs(piv) < kPivotTol) {
      throw std::runtime_error("solve_lp: numerically singular pivot");
    }
    const double inv = 1.0 / piv;
    for (std::size_t j = 0; j <= cols_; ++j) at(prow, j) *= inv;
    at(prow, pcol) = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == prow) continue;
      const double f = at(i, pcol);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(prow, j);
      at(i, pcol) = 0.0;
    }
  }

  void drop_row(std::size_t i) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i * (cols_ + 1)),
             t_.begin() + static_cast<std::ptrdiff_t>((i + 1) * (cols_ + 1)));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
};

struct SplitColumn {
  std::size_t var;
  double sign;
};

// One simplex phase: minimize cost over the current tableau/basis.
// `price_limit` restricts the entering candidates to columns < price_limit
// (used to keep artificial columns out of phase 1 pricing).
// Returns false when the problem is unbounded below.
bool run_simplex(Tableau& t, std::vector<std::size_t>& basis, std::vector<double>& z,
                 double& objective, std::size_t price_limit, double opt_tol) {
  const std::size_t iter_cap = 10000 + 200 * (t.rows() + t.cols());
  for (std::size_t iter = 0;; ++iter) {
    if (iter > iter_cap) {
      throw std::runtime_error("solve_lp: iteration limit exceeded; basis is numerically degenerate");
    }
    // Entering: lowest index with negative reduced cost (Bland).
    std::size_t enter = price_limit;
    for (std::size_t j = 0; j < price_limit; ++j) {
      if (z[j] < -opt_tol) {
        enter = j;
        break;
      }
    }
    if (enter == price_limit) return true;  // optimal

    // Leaving: minimum ratio, ties broken by lowest basic variable index.
    double best_ratio = std::numeric_limits<double>::infinity();
    std::size_t leave = t.rows();
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const double a = t.at(i, enter);
      if (a <= kPivotTol) continue;
      const double ratio = t.rhs(i) / a;
      if (ratio < best_ratio - 1e-12) {
        best_ratio = ratio;
        leave = i;
      } else if (ratio <= best_ratio + 1e-12 && leave < t.rows() && basis[i] < basis[leave]) {
        leave = i;
      }
    }
    if (leave == t.rows()) return false;  // unbounded

    t.pivot(leave, enter);
    const double ze = z[enter];
    if (ze != 0.0) {
      for (std::size_t j = 0; j < z.size(); ++j) z[j] -= ze * t.at(leave, j);
      objective += ze * t.rhs(leave);  // ze < 0, so the objective moves down
      z[enter] = 0.0;
    }
    basis[leave] = enter;
    // Degenerate pivots can leave -1e-17 style residue on the rhs.
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.rhs(i) < 0.0 && t.rhs(i) > -1e-12) t.rhs(i) = 0.0;
    }
  }
}

}  // namespace

LpResult solve_lp(const std::vector<double>& objective,
                  const std::vector<std::vector<double>>& eq_lhs,
                  const std::vector<double>& eq_rhs,
                  const std::vector<bool>& nonneg,
                  LpSense sense,
                  const ToleranceConfig& tol) {
  tol.check();
  const std::size_t nvars = objective.size();
  const std::size_t m = eq_lhs.size();
  if (eq_rhs.size() != m) {
    throw std::invalid_argument("solve_lp: rhs length does not match the number of constraint rows");
  }
  if (nonneg.size() != nvars) {
    throw std::invalid_argument("solve_lp: nonneg flags do not match the number of variables");
  }
  for (const auto& row : eq_lhs) {
    if (row.size() != nvars) {
      throw std::invalid_argument("solve_lp: constraint row width does not match the objective");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument("solve_lp: non-finite constraint entry");
    }
  }
  for (double v : eq_rhs) {
    if (!std::isfinite(v)) throw std::invalid_argument("solve_lp: non-finite rhs entry");
  }
  for (double v : objective) {
    if (!std::isfinite(v)) throw std::invalid_argument("solve_lp: non-finite objective entry");
  }

  // Split free variables into positive and negative parts.
  std::vector<SplitColumn> cols;
  cols.reserve(nvars + 4);
  for (std::size_t v = 0; v < nvars; ++v) {
    cols.push_back({v, 1.0});
    if (!nonneg[v]) cols.push_back({v, -1.0});
  }
  const std::size_t ns = cols.size();

  // Phase 1 tableau: structural columns, then one artificial per row.
  Tableau t(m, ns + m);
  std::vector<bool> flipped(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const double sgn = eq_rhs[i] < 0.0 ? -1.0 : 1.0;
    flipped[i] = sgn < 0.0;
    for (std::size_t j = 0; j < ns; ++j) {
      t.at(i, j) = sgn * eq_lhs[i][cols[j].var] * cols[j].sign;
    }
    t.at(i, ns + i) = 1.0;
    t.rhs(i) = sgn * eq_rhs[i];
  }
  std::vector<std::size_t> basis(m);
  std::vector<double> z(ns + m, 0.0);
  double phase1_obj = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = ns + i;
    phase1_obj += t.rhs(i);
    for (std::size_t j = 0; j < ns; ++j) z[j] -= t.at(i, j);
  }

  const double opt_tol = tol.feasibility_tol;
  if (!run_simplex(t, basis, z, phase1_obj, ns, opt_tol)) {
    throw std::runtime_error("solve_lp: phase 1 reported unbounded, which cannot happen");
  }

  // Re-read the artificial mass from the tableau; the incremental objective
  // update drifts slightly over long pivot sequences.
  phase1_obj = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= ns) phase1_obj += t.rhs(i);
  }

  if (phase1_obj > tol.feasibility_tol) {
    // Infeasible. The phase-1 dual y_i = 1 - (reduced cost of artificial i)
    // is a Farkas certificate for the sign-normalized system; undo the row
    // flips to express it against the caller's rows.
    LpResult res;
    res.status = LpStatus::kInfeasible;
    res.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double y = 1.0 - z[ns + i];
      res.farkas[i] = flipped[i] ? -y : y;
    }
    return res;
  }

  // Feasible: drive artificial variables out of the basis and drop
  // linearly dependent rows.
  for (std::size_t i = t.rows(); i-- > 0;) {
    if (basis[i] < ns) continue;
    std::size_t best = ns;
    double best_abs = 1e-10;
    for (std::size_t j = 0; j < ns; ++j) {
      const double a = std::abs(t.at(i, j));
      if (a > best_abs) {
        best_abs = a;
        best = j;
      }
    }
    if (best < ns) {
      t.pivot(i, best);
      basis[i] = best;
    } else {
      t.drop_row(i);
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 over the structural columns only.
  const double sense_sign = sense == LpSense::kMaximize ? -1.0 : 1.0;
  std::vector<double> cost(ns);
  for (std::size_t j = 0; j < ns; ++j) {
    cost[j] = sense_sign * objective[cols[j].var] * cols[j].sign;
  }
  std::vector<double> z2(ns, 0.0);
  double obj2 = 0.0;
  for (std::size_t j = 0; j < ns; ++j) {
    double acc = cost[j];
    for (std::size_t i = 0; i < t.rows(); ++i) acc -= cost[basis[i]] * t.at(i, j);
    z2[j] = acc;
  }
  for (std::size_t i = 0; i < t.rows(); ++i) obj2 += cost[basis[i]] * t.rhs(i);

  if (!run_simplex(t, basis, z2, obj2, ns, opt_tol)) {
    LpResult res;
    res.status = LpStatus::kUnbounded;
    return res;
  }

  LpResult res;
  res.status = LpStatus::kOptimal;
  res.solution.assign(nvars, 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const SplitColumn& c = cols[basis[i]];
    res.solution[c.var] += c.sign * t.rhs(i);
  }
  res.objective = sense_sign * obj2;
  return res;
}

LpResult solve_lp(const std::vector<double>& objective,
                  const std::vector<std::vector<double>>& eq_lhs,
                  const std::vector<double>& eq_rhs,
                  LpSense sense,
                  const ToleranceConfig& tol) {
  return solve_lp(objective, eq_lhs, eq_rhs, std::vector<bool>(objective.size(), true), sense, tol);
}

}  // namespace chanorder
