#include "chanorder/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "chanorder/lp.hpp"

namespace chanorder {

namespace {

void require_same_dim(const std::vector<double>& query,
                      const std::vector<std::vector<double>>& generators,
                      const char* who) {
  if (generators.empty()) {
    throw std::invalid_argument(std::string(who) + ": empty generator list");
  }
  for (const auto& g : generators) {
    if (g.size() != query.size()) {
      throw std::invalid_argument(std::string(who) + ": alphabet mismatch between query and generators");
    }
  }
}

std::vector<std::vector<double>> raw(const std::vector<Distribution>& points) {
  std::vector<std::vector<double>> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.probs());
  return out;
}

}  // namespace

MembershipResult hull_membership(const std::vector<double>& query,
                                 const std::vector<std::vector<double>>& generators,
                                 const ToleranceConfig& tol) {
  require_same_dim(query, generators, "hull_membership");
  const std::size_t k = generators.size();
  const std::size_t dim = query.size();

  // Feasibility of: sum_j w_j * g_j = query, sum_j w_j = 1, w >= 0.
  std::vector<std::vector<double>> lhs(dim + 1, std::vector<double>(k, 0.0));
  std::vector<double> rhs(dim + 1, 0.0);
  for (std::size_t y = 0; y < dim; ++y) {
    for (std::size_t j = 0; j < k; ++j) lhs[y][j] = generators[j][y];
    rhs[y] = query[y];
  }
  std::fill(lhs[dim].begin(), lhs[dim].end(), 1.0);
  rhs[dim] = 1.0;

  LpResult lp = solve_lp(std::vector<double>(k, 0.0), lhs, rhs, LpSense::kMinimize, tol);
  MembershipResult res;
  if (lp.status == LpStatus::kOptimal) {
    res.inside = true;
    res.weights = std::move(lp.solution);
    return res;
  }
  if (lp.status != LpStatus::kInfeasible) {
    throw std::runtime_error("hull_membership: unexpected LP status");
  }

  // The Farkas dual is (h, s) with <h, g_j> + s <= 0 for all j and
  // <h, query> + s > 0; h alone separates. Rescale to max-abs 1 and
  // recompute the gap so the certificate is self-contained.
  res.inside = false;
  std::vector<double> h(lp.farkas.begin(), lp.farkas.begin() + static_cast<std::ptrdiff_t>(dim));
  double scale = 0.0;
  for (double v : h) scale = std::max(scale, std::abs(v));
  if (scale <= 0.0) {
    throw std::runtime_error("hull_membership: degenerate separating functional");
  }
  for (double& v : h) v /= scale;
  double qv = 0.0;
  for (std::size_t y = 0; y < dim; ++y) qv += h[y] * query[y];
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& g : generators) {
    double gv = 0.0;
    for (std::size_t y = 0; y < dim; ++y) gv += h[y] * g[y];
    best = std::max(best, gv);
  }
  Separator sep;
  sep.functional = std::move(h);
  sep.gap = qv - best;
  res.separator = std::move(sep);
  return res;
}

MembershipResult hull_membership(const Distribution& query,
                                 const std::vector<Distribution>& generators,
                                 const ToleranceConfig& tol) {
  return hull_membership(query.probs(), raw(generators), tol);
}

HullDistance l1_distance_to_hull(const std::vector<double>& query,
                                 const std::vector<std::vector<double>>& generators,
                                 const ToleranceConfig& tol) {
  require_same_dim(query, generators, "l1_distance_to_hull");
  const std::size_t k = generators.size();
  const std::size_t dim = query.size();

  // Variables: w_0..w_{k-1}, then u_y, v_y with
  //   sum_j w_j g_j(y) - u_y + v_y = query(y)
  //   sum_j w_j = 1
  // and minimize sum_y (u_y + v_y) = ||p - query||_1 at the optimum.
  const std::size_t nvars = k + 2 * dim;
  std::vector<double> cost(nvars, 0.0);
  for (std::size_t y = 0; y < dim; ++y) cost[k + 2 * y] = cost[k + 2 * y + 1] = 1.0;

  std::vector<std::vector<double>> lhs(dim + 1, std::vector<double>(nvars, 0.0));
  std::vector<double> rhs(dim + 1, 0.0);
  for (std::size_t y = 0; y < dim; ++y) {
    for (std::size_t j = 0; j < k; ++j) lhs[y][j] = generators[j][y];
    lhs[y][k + 2 * y] = -1.0;
    lhs[y][k + 2 * y + 1] = 1.0;
    rhs[y] = query[y];
  }
  for (std::size_t j = 0; j < k; ++j) lhs[dim][j] = 1.0;
  rhs[dim] = 1.0;

  LpResult lp = solve_lp(cost, lhs, rhs, LpSense::kMinimize, tol);
  if (lp.status != LpStatus::kOptimal) {
    throw std::runtime_error("l1_distance_to_hull: LP did not reach an optimum");
  }
  HullDistance out;
  out.distance = std::max(0.0, lp.objective);
  out.nearest_weights.assign(lp.solution.begin(), lp.solution.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

HullDistance l1_distance_to_hull(const Distribution& query,
                                 const std::vector<Distribution>& generators,
                                 const ToleranceConfig& tol) {
  return l1_distance_to_hull(query.probs(), raw(generators), tol);
}

std::vector<std::size_t> convex_extreme_points(const std::vector<std::vector<double>>& points,
                                               const ToleranceConfig& tol) {
  if (points.empty()) throw std::invalid_argument("convex_extreme_points: empty input");
  const std::size_t dim = points[0].size();
  for (const auto& p : points) {
    if (p.size() != dim) throw std::invalid_argument("convex_extreme_points: alphabet mismatch");
  }

  // Deduplicate: lowest index represents each group of points within
  // dedup_tol of each other (L1).
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dup = false;
    for (std::size_t r : reps) {
      if (l1_distance(points[i], points[r]) <= tol.dedup_tol) {
        dup = true;
        break;
      }
    }
    if (!dup) reps.push_back(i);
  }

  std::vector<std::size_t> kept;
  for (std::size_t idx = 0; idx < reps.size(); ++idx) {
    std::vector<std::vector<double>> others;
    others.reserve(reps.size() - 1);
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (j != idx) others.push_back(points[reps[j]]);
    }
    if (others.empty() || !hull_membership(points[reps[idx]], others, tol).inside) {
      kept.push_back(reps[idx]);
    }
  }
  return kept;  // reps is increasing, so kept already is
}

std::vector<std::size_t> convex_extreme_points(const std::vector<Distribution>& points,
                                               const ToleranceConfig& tol) {
  return convex_extreme_points(raw(points), tol);
}

double hausdorff_tv(const std::vector<Distribution>& a,
                    const std::vector<Distribution>& b,
                    const ToleranceConfig& tol) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff_tv: empty input");
  if (a[0].size() != b[0].size()) throw std::invalid_argument("hausdorff_tv: alphabet mismatch");

  const std::vector<std::vector<double>> pa = raw(a);
  const std::vector<std::vector<double>> pb = raw(b);
  const std::vector<std::size_t> ea = convex_extreme_points(pa, tol);
  const std::vector<std::size_t> eb = convex_extreme_points(pb, tol);

  std::vector<std::vector<double>> gens_a, gens_b;
  for (std::size_t i : ea) gens_a.push_back(pa[i]);
  for (std::size_t i : eb) gens_b.push_back(pb[i]);

  double worst = 0.0;
  for (const auto& p : gens_a) {
    worst = std::max(worst, l1_distance_to_hull(p, gens_b, tol).distance);
  }
  for (const auto& p : gens_b) {
    worst = std::max(worst, l1_distance_to_hull(p, gens_a, tol).distance);
  }
  return 0.5 * worst;
}

}  // namespace chanorder
