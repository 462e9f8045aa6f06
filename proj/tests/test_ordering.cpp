#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "chanorder/ordering.hpp"
#include "chanorder/random.hpp"
#include "chanorder/suites.hpp"

using namespace chanorder;

namespace {
const Channel kId2 = Channel::validate({{1.0, 0.0}, {0.0, 1.0}});
}

TEST_CASE("every channel is degraded from itself") {
  const Channel w = Channel::validate({{0.2, 0.8}, {0.5, 0.5}, {0.9, 0.1}});
  const DegradednessResult res = is_input_degraded(w, w);
  REQUIRE(res.degraded);
  CHECK(channel_distance(compose(w, *res.intertwiner), w) <= 1e-7);
}

TEST_CASE("BSC is degraded from the identity with itself as intertwiner") {
  const DegradednessResult res = is_input_degraded(bsc(0.1), kId2);
  REQUIRE(res.degraded);
  CHECK(channel_distance(*res.intertwiner, bsc(0.1)) <= 1e-9);
}

TEST_CASE("the identity is not degraded from a BSC") {
  const DegradednessResult res = is_input_degraded(kId2, bsc(0.1));
  REQUIRE_FALSE(res.degraded);
  const Refutation& ref = *res.refutation;
  // Row (1,0) sits outside the segment [(0.9,0.1),(0.1,0.9)]: best first
  // coordinate inside the hull is 0.9.
  double best = -1e300;
  for (std::size_t x = 0; x < 2; ++x) {
    double v = 0.0;
    for (std::size_t y = 0; y < 2; ++y) v += ref.payoff[y] * bsc(0.1).row(x)[y];
    best = std::max(best, v);
  }
  double mine = 0.0;
  for (std::size_t y = 0; y < 2; ++y) mine += ref.payoff[y] * kId2.row(ref.row_index)[y];
  CHECK(ref.gap > 0.0);
  CHECK(mine > best + ref.gap * (1.0 - 1e-6));
  CHECK_THROWS_AS(is_input_degraded(kId2, Channel::validate({{1.0}})), std::invalid_argument);
}

TEST_CASE("characteristic keeps only extreme rows, canonically sorted") {
  const Channel id3 = Channel::validate({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(characteristic(id3).points.size() == 3);

  const Channel mid = Channel::validate({{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}});
  const Characteristic ce = characteristic(mid);
  REQUIRE(ce.points.size() == 2);
  CHECK(ce.points[0].probs() == std::vector<double>{0.0, 1.0});
  CHECK(ce.points[1].probs() == std::vector<double>{1.0, 0.0});

  const Channel flat = Channel::validate({{0.4, 0.6}, {0.4, 0.6}, {0.4, 0.6}});
  CHECK(characteristic(flat).points.size() == 1);
}

TEST_CASE("input rank") {
  CHECK(input_rank(Channel::validate({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(input_rank(Channel::validate({{0.4, 0.6}, {0.4, 0.6}})) == 1);
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(mix_seed(17, s));
    const Channel w = gen_random_channel(1 + rng.uniform_index(6), 2, rng.next_u64());
    CHECK(input_rank(w) <= 2);  // a 1-D simplex has at most two extreme points
  }
}

TEST_CASE("input equivalence under row shuffles and surjective relabelings") {
  const Channel w = Channel::validate({{0.2, 0.8}, {0.7, 0.3}});
  const Channel shuffled = Channel::validate({{0.7, 0.3}, {0.2, 0.8}, {0.45, 0.55}});
  CHECK(is_input_equivalent(w, shuffled));

  Rng rng(33);
  const Channel padded = compose(w, deterministic(gen_random_surjection(4, 2, rng), 2));
  CHECK(is_input_equivalent(w, padded));

  CHECK_FALSE(is_input_equivalent(kId2, bsc(0.1)));
}

TEST_CASE("canonical representative") {
  CHECK(canonical_representative(kId2) == Channel::validate({{0.0, 1.0}, {1.0, 0.0}}));
  const Channel mid = Channel::validate({{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}});
  CHECK(canonical_representative(mid) == Channel::validate({{0.0, 1.0}, {1.0, 0.0}}));

  Rng rng(91);
  const Channel w = gen_random_channel(3, 3, rng.next_u64());
  const Channel padded = compose(w, deterministic(gen_random_surjection(5, 3, rng), 3));
  CHECK(canonical_representative(w) == canonical_representative(padded));
}

TEST_CASE("similarity distance on BSC pairs is dominated by the channel distance") {
  CHECK(similarity_distance(bsc(0.1), bsc(0.2)) == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(similarity_distance(bsc(0.1), bsc(0.1)) <= 1e-8);
  CHECK(similarity_distance(bsc(0.1), bsc(0.2)) <= channel_distance(bsc(0.1), bsc(0.2)) + 1e-9);

  const Channel w = Channel::validate({{0.2, 0.8}, {0.7, 0.3}});
  Rng rng(7);
  const Channel padded = compose(w, deterministic(gen_random_surjection(3, 2, rng), 2));
  CHECK(similarity_distance(w, padded) <= 1e-8);  // equivalent classes at distance 0
}

TEST_CASE("separating payoff witnesses and its precondition") {
  const Refutation ref = find_separating_payoff(kId2, bsc(0.1));
  // The gap is the payoff advantage of the best identity row over the best
  // BSC row; for a max-abs-1 payoff it cannot be less than the 0.1 margin
  // of the h=(1,0) witness scaled by the separator, and must stay positive.
  CHECK(ref.gap > 0.0);
  double best_w = -1e300, best_wp = -1e300;
  for (std::size_t x = 0; x < 2; ++x) {
    double vw = 0.0, vp = 0.0;
    for (std::size_t y = 0; y < 2; ++y) {
      vw += ref.payoff[y] * kId2.row(x)[y];
      vp += ref.payoff[y] * bsc(0.1).row(x)[y];
    }
    best_w = std::max(best_w, vw);
    best_wp = std::max(best_wp, vp);
  }
  CHECK(best_w - best_wp == doctest::Approx(ref.gap));
  double scale = 0.0;
  for (double v : ref.payoff) scale = std::max(scale, std::abs(v));
  CHECK(scale == doctest::Approx(1.0));

  CHECK_THROWS_AS(find_separating_payoff(bsc(0.1), kId2), std::invalid_argument);
}

TEST_CASE("separating payoff from a missing simplex vertex") {
  const Channel id3 = Channel::validate({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const Channel two_point = Channel::validate({{0.8, 0.1, 0.1}, {0.1, 0.8, 0.1}});
  const Refutation ref = find_separating_payoff(id3, two_point);
  CHECK(ref.gap > 0.05);
  double best_w = -1e300, best_wp = -1e300;
  for (std::size_t x = 0; x < 3; ++x) {
    double v = 0.0;
    for (std::size_t y = 0; y < 3; ++y) v += ref.payoff[y] * id3.row(x)[y];
    best_w = std::max(best_w, v);
  }
  for (std::size_t x = 0; x < 2; ++x) {
    double v = 0.0;
    for (std::size_t y = 0; y < 3; ++y) v += ref.payoff[y] * two_point.row(x)[y];
    best_wp = std::max(best_wp, v);
  }
  CHECK(best_w - best_wp == doctest::Approx(ref.gap));
}

TEST_CASE("sum decomposition forces lambda from the block masses") {
  const Channel w1 = Channel::validate({{0.2, 0.8}, {0.9, 0.1}});
  const Channel w2 = Channel::validate({{0.5, 0.5}});
  const Channel s = channel_sum(w1, w2);  // outputs: L:1 L:2 R:1 R:2
  const Characteristic c1 = characteristic(w1);
  const Characteristic c2 = characteristic(w2);

  // Supported on the left block only.
  const SumDecomposition left_only =
      decompose_sum_point(Distribution({0.55, 0.45, 0.0, 0.0}), s.output_labels(), c1, c2);
  REQUIRE(left_only.in_hull);
  CHECK(left_only.lambda == 0.0);
  CHECK(left_only.left_weights.has_value());
  CHECK_FALSE(left_only.right_weights.has_value());

  // Even split between embedded characteristic points.
  const SumDecomposition even =
      decompose_sum_point(Distribution({0.1, 0.4, 0.25, 0.25}), s.output_labels(), c1, c2);
  REQUIRE(even.in_hull);
  CHECK(even.lambda == doctest::Approx(0.5));

  // Left-block conditional beyond the hull of the left characteristic.
  const SumDecomposition outside =
      decompose_sum_point(Distribution({0.98, 0.02, 0.0, 0.0}), s.output_labels(), c1, c2);
  CHECK_FALSE(outside.in_hull);

  CHECK_THROWS_AS(
      decompose_sum_point(Distribution({0.5, 0.5}), s.output_labels(), c1, c2),
      std::invalid_argument);
  CHECK_THROWS_AS(decompose_sum_point(Distribution({0.25, 0.25, 0.25, 0.25}),
                                      product_labels(w1.output_labels(), w1.output_labels()),
                                      c1, c1),
                  std::invalid_argument);
}

TEST_CASE("product hull membership over characteristic products") {
  const Channel u2 = Channel::validate({{1.0, 0.0}, {0.0, 1.0}});
  const Characteristic ce = characteristic(u2);
  const auto labels = product_labels(u2.output_labels(), u2.output_labels());

  // A pure product of characteristic points is a generator.
  std::vector<double> gen_point = {0.0, 1.0, 0.0, 0.0};
  const MembershipResult at_gen = product_hull_membership(Distribution(gen_point), labels, ce, ce);
  CHECK(at_gen.inside);

  // The uniform point is the barycenter of the four products.
  const MembershipResult center =
      product_hull_membership(Distribution({0.25, 0.25, 0.25, 0.25}), labels, ce, ce);
  REQUIRE(center.inside);
  for (double w : center.weights) CHECK(w == doctest::Approx(0.25));
}

TEST_CASE("degradedness is preserved by sums and products") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(mix_seed(55, s));
    const DegradedPair p1 = make_degraded_pair(2, 2, 2, rng.next_u64());
    const DegradedPair p2 = make_degraded_pair(2, 2, 2, rng.next_u64());
    CHECK(is_input_degraded(channel_sum(p1.w, p2.w), channel_sum(p1.w_prime, p2.w_prime)).degraded);
    CHECK(is_input_degraded(channel_product(p1.w, p2.w),
                            channel_product(p1.w_prime, p2.w_prime))
              .degraded);
  }
}
