#include "chanorder/games.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chanorder/random.hpp"

namespace chanorder {

namespace {

// m(z, x) = sum_y W(y|x) l(z, y): the expected payoff of playing x at z.
std::vector<std::vector<double>> expected_payoff(const RandomizedGame& g) {
  const std::size_t nx = g.randomizer.input_size();
  const std::size_t ny = g.randomizer.output_size();
  std::vector<std::vector<double>> m(g.z_size, std::vector<double>(nx, 0.0));
  for (std::size_t z = 0; z < g.z_size; ++z) {
    for (std::size_t x = 0; x < nx; ++x) {
      double acc = 0.0;
      for (std::size_t y = 0; y < ny; ++y) acc += g.randomizer.row(x)[y] * g.payoff[z][y];
      m[z][x] = acc;
    }
  }
  return m;
}

}  // namespace

RandomizedGame::RandomizedGame(std::size_t z, std::vector<std::vector<double>> l, Channel w)
    : z_size(z), payoff(std::move(l)), randomizer(std::move(w)) {
  if (z_size == 0) throw std::invalid_argument("RandomizedGame: |Z| must be positive");
  if (payoff.size() != z_size) {
    throw std::invalid_argument("RandomizedGame: payoff must have one row per context");
  }
  for (const auto& row : payoff) {
    if (row.size() != randomizer.output_size()) {
      throw std::invalid_argument("RandomizedGame: payoff width does not match the output alphabet");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument("RandomizedGame: non-finite payoff");
    }
  }
}

std::vector<double> payoff_vector(const Strategy& s, const RandomizedGame& g) {
  if (s.input_size() != g.z_size || s.output_size() != g.randomizer.input_size()) {
    throw std::invalid_argument("payoff_vector: strategy shape does not match the game");
  }
  const auto m = expected_payoff(g);
  std::vector<double> out(g.z_size, 0.0);
  for (std::size_t z = 0; z < g.z_size; ++z) {
    double acc = 0.0;
    for (std::size_t x = 0; x < s.output_size(); ++x) acc += s.row(z)[x] * m[z][x];
    out[z] = acc;
  }
  return out;
}

OptimalPayoff optimal_average_payoff(const RandomizedGame& g) {
  const auto m = expected_payoff(g);
  OptimalPayoff out;
  out.strategy.resize(g.z_size);
  for (std::size_t z = 0; z < g.z_size; ++z) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_x = 0;
    for (std::size_t x = 0; x < m[z].size(); ++x) {
      if (m[z][x] > best) {
        best = m[z][x];
        best_x = x;
      }
    }
    out.strategy[z] = best_x;
    out.value += best;
  }
  out.value /= static_cast<double>(g.z_size);
  return out;
}

std::vector<std::vector<double>> achievable_region_vertices(const RandomizedGame& g,
                                                            std::uint64_t cap) {
  const std::size_t nx = g.randomizer.input_size();
  double combos = 1.0;
  for (std::size_t z = 0; z < g.z_size; ++z) combos *= static_cast<double>(nx);
  if (combos > static_cast<double>(cap)) {
    throw std::invalid_argument("achievable_region_vertices: |X|^|Z| exceeds the enumeration cap");
  }

  const auto m = expected_payoff(g);
  std::vector<std::vector<double>> vertices;
  std::vector<std::size_t> choice(g.z_size, 0);
  for (;;) {
    std::vector<double> v(g.z_size);
    for (std::size_t z = 0; z < g.z_size; ++z) v[z] = m[z][choice[z]];
    bool dup = false;
    for (const auto& u : vertices) {
      if (l1_distance(u, v) <= 1e-9) {
        dup = true;
        break;
      }
    }
    if (!dup) vertices.push_back(std::move(v));

    std::size_t i = g.z_size;
    while (i-- > 0) {
      if (++choice[i] < nx) break;
      choice[i] = 0;
      if (i == 0) return vertices;
    }
  }
}

MembershipResult region_contains(const RandomizedGame& g, const std::vector<double>& v,
                                 std::uint64_t cap, const ToleranceConfig& tol) {
  if (v.size() != g.z_size) {
    throw std::invalid_argument("region_contains: vector length differs from |Z|");
  }
  return hull_membership(v, achievable_region_vertices(g, cap), tol);
}

BssReport check_bss(const Channel& w, const Channel& w_prime, std::size_t trials,
                    std::uint64_t seed, std::uint64_t cap, const ToleranceConfig& tol) {
  if (w.output_labels() != w_prime.output_labels()) {
    throw std::invalid_argument("check_bss: output alphabet mismatch");
  }
  BssReport report;
  const DegradednessResult deg = is_input_degraded(w, w_prime, tol);
  report.degraded = deg.degraded;

  if (!deg.degraded) {
    // Payoff domination fails on the single-context game built from the
    // hull refutation.
    const Refutation ref = find_separating_payoff(w, w_prime, tol);
    const RandomizedGame game_w(1, {ref.payoff}, w);
    const RandomizedGame game_wp(1, {ref.payoff}, w_prime);
    BssWitness wit;
    wit.row_index = ref.row_index;
    wit.payoff = ref.payoff;
    wit.gap = ref.gap;
    wit.opt_payoff_lhs = optimal_average_payoff(game_w).value;
    wit.opt_payoff_rhs = optimal_average_payoff(game_wp).value;
    report.passed = wit.opt_payoff_lhs > wit.opt_payoff_rhs + wit.gap * (1.0 - 1e-6);
    report.witness = std::move(wit);
    return report;
  }

  report.passed = true;
  Rng rng(seed);
  report.trials.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t z_size = 1 + rng.uniform_index(3);
    std::vector<std::vector<double>> payoff(z_size, std::vector<double>(w.output_size()));
    for (auto& row : payoff) {
      for (double& v : row) v = rng.uniform(-1.0, 1.0);
    }
    const RandomizedGame game_w(z_size, payoff, w);
    const RandomizedGame game_wp(z_size, payoff, w_prime);

    BssTrial trial;
    trial.z_size = z_size;
    trial.payoff = payoff;
    trial.opt_payoff_lhs = optimal_average_payoff(game_w).value;
    trial.opt_payoff_rhs = optimal_average_payoff(game_wp).value;
    trial.payoff_ok = trial.opt_payoff_lhs <= trial.opt_payoff_rhs + 1e-9;

    const auto rhs_vertices = achievable_region_vertices(game_wp, cap);
    trial.region_included = true;
    trial.worst_residual = 0.0;
    for (const auto& vertex : achievable_region_vertices(game_w, cap)) {
      MembershipResult mem = hull_membership(vertex, rhs_vertices, tol);
      if (!mem.inside) {
        trial.region_included = false;
        break;
      }
      std::vector<double> rec(z_size, 0.0);
      for (std::size_t j = 0; j < rhs_vertices.size(); ++j) {
        for (std::size_t z = 0; z < z_size; ++z) rec[z] += mem.weights[j] * rhs_vertices[j][z];
      }
      trial.worst_residual = std::max(trial.worst_residual, l1_distance(rec, vertex));
    }

    report.passed = report.passed && trial.payoff_ok && trial.region_included;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace chanorder
