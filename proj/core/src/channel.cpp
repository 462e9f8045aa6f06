#include "chanorder/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace chanorder {

Channel::Channel(std::vector<Symbol> output_labels, std::vector<Distribution> rows)
    : output_labels_(std::move(output_labels)), rows_(std::move(rows)) {
  if (output_labels_.empty()) throw std::invalid_argument("Channel: empty output alphabet");
  if (rows_.empty()) throw std::invalid_argument("Channel: empty input alphabet");
  if (!all_distinct(output_labels_)) {
    throw std::invalid_argument("Channel: duplicate output labels");
  }
  for (const Distribution& r : rows_) {
    if (r.size() != output_labels_.size()) {
      throw std::invalid_argument("Channel: row width does not match the output alphabet");
    }
  }
}

Channel Channel::validate(const std::vector<std::vector<double>>& raw) {
  if (raw.empty() || raw[0].empty()) {
    throw std::invalid_argument("Channel::validate: empty matrix");
  }
  return validate(raw, default_labels(raw[0].size()));
}

Channel Channel::validate(const std::vector<std::vector<double>>& raw,
                          std::vector<Symbol> output_labels) {
  std::vector<Distribution> rows;
  rows.reserve(raw.size());
  for (std::size_t x = 0; x < raw.size(); ++x) {
    try {
      rows.emplace_back(raw[x]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("Channel::validate: row " + std::to_string(x + 1) + ": " + e.what());
    }
  }
  return Channel(std::move(output_labels), std::move(rows));
}

Channel compose(const Channel& v, const Channel& w) {
  if (v.input_size() != w.output_size()) {
    throw std::invalid_argument("compose: inner alphabet mismatch (|Y| of w vs input size of v)");
  }
  std::vector<Distribution> rows;
  rows.reserve(w.input_size());
  for (std::size_t x = 0; x < w.input_size(); ++x) {
    std::vector<double> out(v.output_size(), 0.0);
    for (std::size_t y = 0; y < w.output_size(); ++y) {
      const double wyx = w.row(x)[y];
      if (wyx == 0.0) continue;
      for (std::size_t z = 0; z < v.output_size(); ++z) out[z] += v.row(y)[z] * wyx;
    }
    rows.emplace_back(std::move(out));
  }
  return Channel(v.output_labels(), std::move(rows));
}

Channel deterministic(const std::vector<std::size_t>& f, std::vector<Symbol> output_labels) {
  if (f.empty()) throw std::invalid_argument("deterministic: empty input alphabet");
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= output_labels.size()) {
      throw std::invalid_argument("deterministic: f maps input " + std::to_string(x + 1) +
                                  " outside the output alphabet");
    }
  }
  std::vector<Distribution> rows;
  rows.reserve(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    rows.push_back(Distribution::unit(output_labels.size(), f[x]));
  }
  return Channel(std::move(output_labels), std::move(rows));
}

Channel deterministic(const std::vector<std::size_t>& f, std::size_t output_size) {
  return deterministic(f, default_labels(output_size));
}

double channel_distance(const Channel& w, const Channel& w_prime) {
  if (w.input_size() != w_prime.input_size() || w.output_labels() != w_prime.output_labels()) {
    throw std::invalid_argument("channel_distance: shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t x = 0; x < w.input_size(); ++x) {
    worst = std::max(worst, tv_distance(w.row(x), w_prime.row(x)));
  }
  return worst;
}

Channel channel_sum(const Channel& w1, const Channel& w2) {
  const std::size_t m1 = w1.output_size();
  const std::size_t m2 = w2.output_size();
  std::vector<Distribution> rows;
  rows.reserve(w1.input_size() + w2.input_size());
  for (std::size_t x = 0; x < w1.input_size(); ++x) {
    std::vector<double> r(m1 + m2, 0.0);
    for (std::size_t y = 0; y < m1; ++y) r[y] = w1.row(x)[y];
    rows.emplace_back(std::move(r));
  }
  for (std::size_t x = 0; x < w2.input_size(); ++x) {
    std::vector<double> r(m1 + m2, 0.0);
    for (std::size_t y = 0; y < m2; ++y) r[m1 + y] = w2.row(x)[y];
    rows.emplace_back(std::move(r));
  }
  return Channel(sum_labels(w1.output_labels(), w2.output_labels()), std::move(rows));
}

Channel channel_product(const Channel& w1, const Channel& w2) {
  const std::size_t m1 = w1.output_size();
  const std::size_t m2 = w2.output_size();
  std::vector<Distribution> rows;
  rows.reserve(w1.input_size() * w2.input_size());
  for (std::size_t x1 = 0; x1 < w1.input_size(); ++x1) {
    for (std::size_t x2 = 0; x2 < w2.input_size(); ++x2) {
      std::vector<double> r(m1 * m2, 0.0);
      for (std::size_t y1 = 0; y1 < m1; ++y1) {
        for (std::size_t y2 = 0; y2 < m2; ++y2) {
          r[y1 * m2 + y2] = w1.row(x1)[y1] * w2.row(x2)[y2];
        }
      }
      rows.emplace_back(std::move(r));
    }
  }
  return Channel(product_labels(w1.output_labels(), w2.output_labels()), std::move(rows));
}

Channel bsc(double flip) {
  if (!(flip >= 0.0 && flip <= 1.0)) {
    throw std::invalid_argument("bsc: flip probability outside [0,1]");
  }
  return Channel::validate({{1.0 - flip, flip}, {flip, 1.0 - flip}});
}

}  // namespace chanorder
