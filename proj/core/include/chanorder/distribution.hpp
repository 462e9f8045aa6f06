#ifndef CHANORDER_DISTRIBUTION_HPP
#define CHANORDER_DISTRIBUTION_HPP

#include <cstddef>
#include <vector>

namespace chanorder {

/// A probability vector over a finite alphabet.
///
/// Construction accepts entries down to -1e-12 (serialization rounding) and
/// row sums within 1e-9 of one; anything worse is rejected. Accepted vectors
/// are clamped to [0, inf) and renormalized, so a constructed Distribution
/// always has nonnegative entries summing to one up to machine precision.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  /// Point mass on `index`.
  static Distribution unit(std::size_t size, std::size_t index);
  static Distribution uniform(std::size_t size);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  bool operator==(const Distribution& other) const { return probs_ == other.probs_; }

 private:
  std::vector<double> probs_;
};

double l1_distance(const std::vector<double>& a, const std::vector<double>& b);
double l1_distance(const Distribution& a, const Distribution& b);

/// Total variation distance: half the L1 distance.
double tv_distance(const Distribution& a, const Distribution& b);

/// Lexicographic comparison of probability vectors; the canonical order used
/// when sorting characteristic points.
bool lex_less(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace chanorder

#endif  // CHANORDER_DISTRIBUTION_HPP
