#ifndef CHANORDER_GAMES_HPP
#define CHANORDER_GAMES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "chanorder/channel.hpp"
#include "chanorder/geometry.hpp"
#include "chanorder/ordering.hpp"

namespace chanorder {

inline constexpr std::uint64_t kDefaultStrategyCap = 100'000;

/// Randomized game (Z, X, Y, l, W): a player observing z picks x, the
/// randomizer W draws y, and the payoff is l(z, y).
struct RandomizedGame {
  std::size_t z_size = 0;
  std::vector<std::vector<double>> payoff;  // z_size rows over Y
  Channel randomizer;

  RandomizedGame(std::size_t z, std::vector<std::vector<double>> l, Channel w);
};

/// A strategy is a channel from Z to X.
using Strategy = Channel;

/// Payoff vector over Z: component z is sum_{x,y} S(x|z) W(y|x) l(z,y).
std::vector<double> payoff_vector(const Strategy& s, const RandomizedGame& g);

struct OptimalPayoff {
  double value = 0.0;
  /// A maximizing deterministic strategy z -> x (lowest index on ties).
  std::vector<std::size_t> strategy;
};

/// (1/|Z|) sum_z max_x sum_y W(y|x) l(z,y); a deterministic strategy
/// attains the optimum.
OptimalPayoff optimal_average_payoff(const RandomizedGame& g);

/// Payoff vectors of all |X|^|Z| deterministic strategies, deduplicated.
/// Their convex hull is the achievable payoff region.
std::vector<std::vector<double>> achievable_region_vertices(const RandomizedGame& g,
                                                            std::uint64_t cap = kDefaultStrategyCap);

/// Hull membership of `v` in the achievable payoff region.
MembershipResult region_contains(const RandomizedGame& g, const std::vector<double>& v,
                                 std::uint64_t cap = kDefaultStrategyCap,
                                 const ToleranceConfig& tol = {});

struct BssTrial {
  std::size_t z_size = 0;
  std::vector<std::vector<double>> payoff;
  double opt_payoff_lhs = 0.0;
  double opt_payoff_rhs = 0.0;
  /// Region inclusion: every region vertex of the lhs game is inside the
  /// rhs region; the worst reconstruction residual over those memberships.
  bool region_included = false;
  double worst_residual = 0.0;
  /// Payoff domination: opt_lhs <= opt_rhs + 1e-9.
  bool payoff_ok = false;
};

struct BssWitness {
  std::size_t row_index = 0;
  std::vector<double> payoff;  // single-context payoff over Y
  double gap = 0.0;
  double opt_payoff_lhs = 0.0;
  double opt_payoff_rhs = 0.0;
};

/// Desk-scale check of the Blackwell-Sherman-Stein style equivalence. For a
/// degraded pair, samples `trials` games (|Z| <= 3, payoffs uniform in
/// [-1,1]) and verifies region inclusion and the optimal-payoff inequality;
/// for a non-degraded pair, converts the hull refutation into a violating
/// single-context game.
struct BssReport {
  bool degraded = false;
  bool passed = false;
  std::vector<BssTrial> trials;
  std::optional<BssWitness> witness;
};

BssReport check_bss(const Channel& w, const Channel& w_prime, std::size_t trials,
                    std::uint64_t seed, std::uint64_t cap = kDefaultStrategyCap,
                    const ToleranceConfig& tol = {});

}  // namespace chanorder

#endif  // CHANORDER_GAMES_HPP
