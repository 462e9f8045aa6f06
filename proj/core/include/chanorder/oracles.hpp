#ifndef CHANORDER_ORACLES_HPP
#define CHANORDER_ORACLES_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "chanorder/channel.hpp"
#include "chanorder/distribution.hpp"

namespace chanorder::oracle {

/// Brute-force reference computations. Everything here works by dense grid
/// enumeration or closed form and deliberately avoids the LP/geometry code
/// paths it is used to cross-check.

/// Visits every composition of `total` into `parts` nonnegative integers.
void for_each_composition(std::size_t total, std::size_t parts,
                          const std::function<void(const std::vector<std::size_t>&)>& fn);

/// min over the weight grid {w : sum w = 1, w_j multiples of step} of
/// ||sum_j w_j g_j - q||_1.
double grid_min_l1_to_hull(const std::vector<double>& query,
                           const std::vector<std::vector<double>>& generators,
                           double step);

/// Hausdorff distance in total variation between conv(a) and conv(b),
/// sampled on the weight grid of both generator sets.
double grid_hausdorff_tv(const std::vector<std::vector<double>>& a,
                         const std::vector<std::vector<double>>& b,
                         double step);

/// sup over random encoders E : U -> X, discretized per row on the weight
/// grid, of sum_{u,x,y} p(u) E(x|u) W(y|x) D(u|y).
double grid_sup_pc(const Distribution& prior, const Channel& w, const Channel& decoder,
                   double step);

/// Closed-form BSC capacity in nats: ln 2 + p ln p + (1-p) ln(1-p).
double bsc_capacity_nats(double flip);

}  // namespace chanorder::oracle

#endif  // CHANORDER_ORACLES_HPP
