#ifndef CHANORDER_CODING_HPP
#define CHANORDER_CODING_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chanorder/channel.hpp"
#include "chanorder/distribution.hpp"

namespace chanorder {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// (n,M)-decoder: a total map from output n-tuples to message ids. Tuples
/// are indexed in base |Y| with the first symbol most significant; both
/// symbols and message ids are 0-based in memory.
struct Decoder {
  std::size_t blocklength = 0;    // n
  std::size_t message_count = 0;  // M
  std::size_t output_size = 0;    // |Y|
  std::vector<std::size_t> table; // |Y|^n entries, values in [0, M)

  void check() const;
};

/// (n,M)-encoder: one input n-tuple per message.
struct Encoder {
  std::size_t blocklength = 0;
  std::size_t message_count = 0;
  std::vector<std::vector<std::size_t>> table;  // M rows of length n

  void check() const;
};

/// Probability of error of the decoder under maximum-likelihood encoding:
///   1 - (1/M) sum_m max_{x^n} sum_{y^n : D(y^n)=m} prod_i W(y_i|x_i).
/// Enumerates all |X|^n input tuples per message; errors out beyond `cap`.
double pe_decoder_ml(const Channel& w, const Decoder& d,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// Error probability of the ML decoder for a fixed encoder:
///   1 - (1/M) sum_{y^n} max_m prod_i W(y_i | E_i(m)).
double pe_encoder(const Channel& w, const Encoder& e,
                  std::uint64_t cap = kDefaultEnumerationCap);

/// Optimal error probability over all (n,M)-encoders, by exhaustive
/// enumeration of the |X|^{nM} encoder tables.
double pe_opt(const Channel& w, std::size_t n, std::size_t m,
              std::uint64_t cap = kDefaultEnumerationCap);

struct PcResult {
  double value = 0.0;
  /// Maximizing deterministic encoder u -> x (lowest index on ties).
  std::vector<std::size_t> encoder;
};

/// Optimal probability of guessing U through W with the fixed single-shot
/// decoder D (a channel from Y to U):
///   sum_u p(u) max_x sum_y W(y|x) D(u|y).
PcResult pc(const Distribution& prior, const Channel& w, const Channel& decoder);

/// Channel capacity in nats, via Blahut-Arimoto alternating maximization
/// from the uniform input distribution; iterates until the upper/lower
/// capacity bounds are within `tol`.
double capacity(const Channel& w, double tol = 1e-9);

}  // namespace chanorder

#endif  // CHANORDER_CODING_HPP
