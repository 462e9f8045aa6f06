#include "chanorder/distribution.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace chanorder {

namespace {
constexpr double kNegativeSlack = 1e-12;
constexpr double kSumSlack = 1e-9;
}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("Distribution: empty probability vector");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    double p = probs_[i];
    if (!std::isfinite(p)) {
      throw std::invalid_argument("Distribution: non-finite entry at index " + std::to_string(i));
    }
    if (p < -kNegativeSlack) {
      throw std::invalid_argument("Distribution: entry " + std::to_string(p) + " at index " +
                                  std::to_string(i) + " is below -1e-12");
    }
    if (p < 0.0) p = 0.0;
    probs_[i] = p;
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumSlack) {
    throw std::invalid_argument("Distribution: entries sum to " + std::to_string(sum) +
                                ", off from 1 by more than 1e-9");
  }
  // Renormalize only genuine drift. Skipping ulp-level deviations keeps
  // construction idempotent, so serialized values parse back bit-exact.
  if (std::abs(sum - 1.0) > 1e-13) {
    for (double& p : probs_) p /= sum;
  }
}

Distribution Distribution::unit(std::size_t size, std::size_t index) {
  if (index >= size) throw std::invalid_argument("Distribution::unit: index out of range");
  std::vector<double> v(size, 0.0);
  v[index] = 1.0;
  return Distribution(std::move(v));
}

Distribution Distribution::uniform(std::size_t size) {
  if (size == 0) throw std::invalid_argument("Distribution::uniform: empty alphabet");
  return Distribution(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("l1_distance: vectors of different length");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

double l1_distance(const Distribution& a, const Distribution& b) {
  return l1_distance(a.probs(), b.probs());
}

double tv_distance(const Distribution& a, const Distribution& b) {
  return 0.5 * l1_distance(a, b);
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  return a < b;
}

}  // namespace chanorder
