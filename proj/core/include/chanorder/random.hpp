#ifndef CHANORDER_RANDOM_HPP
#define CHANORDER_RANDOM_HPP

#include <cstdint>
#include <vector>

#include "chanorder/channel.hpp"
#include "chanorder/coding.hpp"

namespace chanorder {

/// Deterministic random source built on splitmix64. No std distributions
/// are involved, so a seed produces the same stream on every platform and
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Uniform in {0, ..., n-1}, unbiased.
  std::size_t uniform_index(std::size_t n);
  /// Uniform point of the probability simplex (normalized exponentials).
  std::vector<double> simplex_point(std::size_t k);

 private:
  std::uint64_t splitmix();
  std::uint64_t state_;
};

/// Stateless seed derivation for per-case streams inside batch suites.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Channel with rows drawn uniformly from the simplex.
Channel gen_random_channel(std::size_t inputs, std::size_t outputs, std::uint64_t seed);

/// Uniformly random decoder table on all |Y|^n tuples.
Decoder gen_random_decoder(std::size_t output_size, std::size_t n, std::size_t m,
                           std::uint64_t seed);

/// Uniformly random encoder table.
Encoder gen_random_encoder(std::size_t input_size, std::size_t n, std::size_t m,
                           std::uint64_t seed);

/// Random surjection from {0..domain-1} onto {0..codomain-1}; requires
/// domain >= codomain.
std::vector<std::size_t> gen_random_surjection(std::size_t domain, std::size_t codomain, Rng& rng);

}  // namespace chanorder

#endif  // CHANORDER_RANDOM_HPP
