#include "chanorder/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace chanorder::oracle {

namespace {

void compositions_rec(std::size_t remaining, std::size_t part, std::vector<std::size_t>& acc,
                      const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (part + 1 == acc.size()) {
    acc[part] = remaining;
    fn(acc);
    return;
  }
  for (std::size_t take = 0; take <= remaining; ++take) {
    acc[part] = take;
    compositions_rec(remaining - take, part + 1, acc, fn);
  }
}

std::vector<std::vector<double>> grid_hull_points(const std::vector<std::vector<double>>& gens,
                                                  double step) {
  const std::size_t n = static_cast<std::size_t>(std::lround(1.0 / step));
  const std::size_t dim = gens[0].size();
  std::vector<std::vector<double>> points;
  for_each_composition(n, gens.size(), [&](const std::vector<std::size_t>& counts) {
    std::vector<double> p(dim, 0.0);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const double wj = static_cast<double>(counts[j]) / static_cast<double>(n);
      if (wj == 0.0) continue;
      for (std::size_t y = 0; y < dim; ++y) p[y] += wj * gens[j][y];
    }
    points.push_back(std::move(p));
  });
  return points;
}

double directed_max_min_l1(const std::vector<std::vector<double>>& from,
                           const std::vector<std::vector<double>>& to) {
  double worst = 0.0;
  for (const auto& a : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : to) {
      double d = 0.0;
      for (std::size_t y = 0; y < a.size(); ++y) d += std::abs(a[y] - b[y]);
      if (d < best) best = d;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

void for_each_composition(std::size_t total, std::size_t parts,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (parts == 0) throw std::invalid_argument("for_each_composition: zero parts");
  std::vector<std::size_t> acc(parts, 0);
  compositions_rec(total, 0, acc, fn);
}

double grid_min_l1_to_hull(const std::vector<double>& query,
                           const std::vector<std::vector<double>>& generators,
                           double step) {
  if (generators.empty()) throw std::invalid_argument("grid_min_l1_to_hull: no generators");
  const std::size_t n = static_cast<std::size_t>(std::lround(1.0 / step));
  const std::size_t dim = query.size();
  double best = std::numeric_limits<double>::infinity();
  for_each_composition(n, generators.size(), [&](const std::vector<std::size_t>& counts) {
    double d = 0.0;
    for (std::size_t y = 0; y < dim; ++y) {
      double py = 0.0;
      for (std::size_t j = 0; j < generators.size(); ++j) {
        py += static_cast<double>(counts[j]) / static_cast<double>(n) * generators[j][y];
      }
      d += std::abs(py - query[y]);
    }
    best = std::min(best, d);
  });
  return best;
}

double grid_hausdorff_tv(const std::vector<std::vector<double>>& a,
                         const std::vector<std::vector<double>>& b,
                         double step) {
  if (a.empty() || b.empty()) throw std::invalid_argument("grid_hausdorff_tv: empty input");
  const auto pa = grid_hull_points(a, step);
  const auto pb = grid_hull_points(b, step);
  return 0.5 * std::max(directed_max_min_l1(pa, pb), directed_max_min_l1(pb, pa));
}

double grid_sup_pc(const Distribution& prior, const Channel& w, const Channel& decoder,
                   double step) {
  const std::size_t nu = prior.size();
  const std::size_t nx = w.input_size();
  const std::size_t ny = w.output_size();
  if (decoder.input_size() != ny || decoder.output_size() != nu) {
    throw std::invalid_argument("grid_sup_pc: decoder shape mismatch");
  }

  // m(u, x) = sum_y W(y|x) D(u|y)
  std::vector<std::vector<double>> m(nu, std::vector<double>(nx, 0.0));
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t x = 0; x < nx; ++x) {
      double acc = 0.0;
      for (std::size_t y = 0; y < ny; ++y) acc += w.row(x)[y] * decoder.row(y)[u];
      m[u][x] = acc;
    }
  }

  // Per-row grid values p(u) * sum_x E(x|u) m(u,x); the encoder value is
  // their sum, maximized over the full product of row choices.
  const std::size_t n = static_cast<std::size_t>(std::lround(1.0 / step));
  std::vector<std::vector<double>> row_values(nu);
  for (std::size_t u = 0; u < nu; ++u) {
    for_each_composition(n, nx, [&](const std::vector<std::size_t>& counts) {
      double acc = 0.0;
      for (std::size_t x = 0; x < nx; ++x) {
        acc += static_cast<double>(counts[x]) / static_cast<double>(n) * m[u][x];
      }
      row_values[u].push_back(prior[u] * acc);
    });
  }

  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> choice(nu, 0);
  for (;;) {
    double total = 0.0;
    for (std::size_t u = 0; u < nu; ++u) total += row_values[u][choice[u]];
    best = std::max(best, total);
    std::size_t i = nu;
    while (i-- > 0) {
      if (++choice[i] < row_values[i].size()) break;
      choice[i] = 0;
      if (i == 0) return best;
    }
  }
}

double bsc_capacity_nats(double flip) {
  const auto xlogx = [](double p) { return p > 0.0 ? p * std::log(p) : 0.0; };
  return std::log(2.0) + xlogx(flip) + xlogx(1.0 - flip);
}

}  // namespace chanorder::oracle
