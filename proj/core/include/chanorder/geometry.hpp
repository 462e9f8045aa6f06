#ifndef CHANORDER_GEOMETRY_HPP
#define CHANORDER_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "chanorder/distribution.hpp"
#include "chanorder/tolerances.hpp"

namespace chanorder {

/// Separating functional for a point outside a hull:
///   <functional, query> >= max_g <functional, g> + gap,  gap > 0.
/// The functional is scaled to unit max-abs norm.
struct Separator {
  std::vector<double> functional;
  double gap = 0.0;
};

struct MembershipResult {
  bool inside = false;
  /// Convex coefficients over the generators (present iff inside).
  std::vector<double> weights;
  /// Farkas refutation (present iff outside).
  std::optional<Separator> separator;
};

/// Decides `query in conv(generators)` by LP feasibility. Inside answers
/// carry convex weights reconstructing the query; outside answers carry a
/// separating functional obtained from the phase-1 dual.
MembershipResult hull_membership(const std::vector<double>& query,
                                 const std::vector<std::vector<double>>& generators,
                                 const ToleranceConfig& tol = {});
MembershipResult hull_membership(const Distribution& query,
                                 const std::vector<Distribution>& generators,
                                 const ToleranceConfig& tol = {});

struct HullDistance {
  double distance = 0.0;
  std::vector<double> nearest_weights;
};

/// min_{p in conv(generators)} ||p - query||_1, with the minimizing convex
/// weights. The absolute values are linearized with one nonnegative slack
/// pair per coordinate.
HullDistance l1_distance_to_hull(const std::vector<double>& query,
                                 const std::vector<std::vector<double>>& generators,
                                 const ToleranceConfig& tol = {});
HullDistance l1_distance_to_hull(const Distribution& query,
                                 const std::vector<Distribution>& generators,
                                 const ToleranceConfig& tol = {});

/// Indices of the convex-extreme members of `points`, sorted ascending.
/// Duplicates within dedup_tol (L1) collapse to their lowest index first;
/// a surviving point is kept iff it is outside the hull of the other
/// survivors.
std::vector<std::size_t> convex_extreme_points(const std::vector<std::vector<double>>& points,
                                               const ToleranceConfig& tol = {});
std::vector<std::size_t> convex_extreme_points(const std::vector<Distribution>& points,
                                               const ToleranceConfig& tol = {});

/// Hausdorff distance, in total variation, between conv(a) and conv(b).
/// Both inputs are read as generator sets of their hulls. The sup over a
/// hull of the (convex) distance function is attained at an extreme point,
/// so only extreme generators are visited.
double hausdorff_tv(const std::vector<Distribution>& a,
                    const std::vector<Distribution>& b,
                    const ToleranceConfig& tol = {});

}  // namespace chanorder

#endif  // CHANORDER_GEOMETRY_HPP
