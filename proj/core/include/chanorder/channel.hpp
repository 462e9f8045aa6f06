#ifndef CHANORDER_CHANNEL_HPP
#define CHANORDER_CHANNEL_HPP

#include <cstddef>
#include <vector>

#include "chanorder/alphabet.hpp"
#include "chanorder/distribution.hpp"

namespace chanorder {

/// A discrete memoryless channel: a row-stochastic matrix with one row per
/// input symbol. Input symbols are positional (1..n); output symbols carry
/// explicit labels. Channels are immutable values.
class Channel {
 public:
  Channel(std::vector<Symbol> output_labels, std::vector<Distribution> rows);

  /// Builds a channel from a raw matrix, enforcing the row invariants
  /// (entries >= -1e-12, row sums within 1e-9 of one; accepted rows are
  /// renormalized). Output labels default to "1".."m".
  static Channel validate(const std::vector<std::vector<double>>& raw);
  static Channel validate(const std::vector<std::vector<double>>& raw,
                          std::vector<Symbol> output_labels);

  std::size_t input_size() const { return rows_.size(); }
  std::size_t output_size() const { return output_labels_.size(); }
  const std::vector<Symbol>& output_labels() const { return output_labels_; }
  const std::vector<Distribution>& rows() const { return rows_; }
  /// Row of W for input x, i.e. the distribution W(.|x).
  const Distribution& row(std::size_t x) const { return rows_[x]; }

  bool operator==(const Channel& other) const {
    return output_labels_ == other.output_labels_ && rows_ == other.rows_;
  }

 private:
  std::vector<Symbol> output_labels_;
  std::vector<Distribution> rows_;
};

/// (v o w)(z|x) = sum_y v(z|y) w(y|x); w feeds v.
Channel compose(const Channel& v, const Channel& w);

/// D_f(y|x) = 1 iff y = f(x). `f` maps 0-based input indices to 0-based
/// output indices.
Channel deterministic(const std::vector<std::size_t>& f, std::vector<Symbol> output_labels);
Channel deterministic(const std::vector<std::size_t>& f, std::size_t output_size);

/// d_{X,Y}(w, w') = max over inputs of the total variation between rows.
double channel_distance(const Channel& w, const Channel& w_prime);

/// Block-diagonal sum over tagged alphabets; left inputs/outputs first.
Channel channel_sum(const Channel& w1, const Channel& w2);

/// Product channel over paired alphabets; row (x1,x2) is the outer product
/// of the factor rows, with x2 and y2 varying fastest.
Channel channel_product(const Channel& w1, const Channel& w2);

/// Binary symmetric channel with flip probability p.
Channel bsc(double flip);

}  // namespace chanorder

#endif  // CHANORDER_CHANNEL_HPP
