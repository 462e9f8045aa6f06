#ifndef CHANORDER_SUITES_HPP
#define CHANORDER_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chanorder/channel.hpp"

namespace chanorder {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Names accepted by run_suite, excluding "all".
std::vector<std::string> suite_names();

/// Runs one of the named invariant suites ("geometry", "channel",
/// "ordering", "coding", "games") or every suite ("all"). All randomness is
/// derived from `seed`; a fixed seed reproduces results bit for bit.
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed);

/// Channel whose rows stay at least 1/(2|Y|) away from the simplex faces:
/// each row is an even blend of a uniform-simplex draw and the uniform
/// distribution.
Channel gen_interior_channel(std::size_t inputs, std::size_t outputs, std::uint64_t seed);

/// W' random, V' random, W = W' o V'. The pair (W, W') is input-degraded by
/// construction.
struct DegradedPair {
  Channel w;
  Channel w_prime;
  Channel planted_intertwiner;
};
DegradedPair make_degraded_pair(std::size_t x_size, std::size_t x_prime_size,
                                std::size_t y_size, std::uint64_t seed);

/// W' has interior rows; W mixes rows of W' except for one planted row
/// pushed against a simplex vertex, which lies outside conv(rows of W') by
/// a fixed margin. Construction is confirmed by the LP certificate.
struct RefutedPair {
  Channel w;
  Channel w_prime;
  std::size_t planted_row;
};
RefutedPair make_refuted_pair(std::size_t x_size, std::size_t x_prime_size,
                              std::size_t y_size, std::uint64_t seed);

}  // namespace chanorder

#endif  // CHANORDER_SUITES_HPP
