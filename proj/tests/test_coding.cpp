#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "chanorder/coding.hpp"
#include "chanorder/oracles.hpp"
#include "chanorder/random.hpp"
#include "chanorder/suites.hpp"

using namespace chanorder;

namespace {

Decoder identity_decoder(std::size_t symbols) {
  Decoder d;
  d.blocklength = 1;
  d.message_count = symbols;
  d.output_size = symbols;
  d.table.resize(symbols);
  for (std::size_t y = 0; y < symbols; ++y) d.table[y] = y;
  return d;
}

}  // namespace

TEST_CASE("decoder error probability") {
  const Channel id = Channel::validate({{1.0, 0.0}, {0.0, 1.0}});
  CHECK(pe_decoder_ml(id, identity_decoder(2)) == doctest::Approx(0.0));
  CHECK(pe_decoder_ml(bsc(0.1), identity_decoder(2)) == doctest::Approx(0.1));

  // A single message decodes the whole output space.
  Decoder single;
  single.blocklength = 2;
  single.message_count = 1;
  single.output_size = 2;
  single.table.assign(4, 0);
  CHECK(pe_decoder_ml(bsc(0.3), single) == doctest::Approx(0.0));

  CHECK_THROWS_AS(pe_decoder_ml(Channel::validate({{0.2, 0.3, 0.5}}), identity_decoder(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(pe_decoder_ml(bsc(0.1), identity_decoder(2), /*cap=*/1), std::invalid_argument);
}

TEST_CASE("encoder error probability") {
  Encoder e;
  e.blocklength = 1;
  e.message_count = 2;
  e.table = {{0}, {1}};
  CHECK(pe_encoder(Channel::validate({{1.0, 0.0}, {0.0, 1.0}}), e) == doctest::Approx(0.0));
  CHECK(pe_encoder(bsc(0.1), e) == doctest::Approx(0.1));

  // Identical codewords: the ML decoder can serve only one of two messages.
  Encoder same;
  same.blocklength = 1;
  same.message_count = 2;
  same.table = {{0}, {0}};
  CHECK(pe_encoder(bsc(0.1), same) == doctest::Approx(0.5));

  CHECK_THROWS_AS(pe_encoder(bsc(0.1), e, /*cap=*/1), std::invalid_argument);
}

TEST_CASE("optimal encoder error probability by brute force") {
  CHECK(pe_opt(Channel::validate({{1.0, 0.0}, {0.0, 1.0}}), 1, 2) == doctest::Approx(0.0));
  CHECK(pe_opt(bsc(0.3), 1, 1) == doctest::Approx(0.0));
  CHECK(pe_opt(bsc(0.1), 1, 2) == doctest::Approx(0.1));
  CHECK_THROWS_AS(pe_opt(bsc(0.1), 3, 3, /*cap=*/10), std::invalid_argument);
}

TEST_CASE("guessing probability with a fixed decoder") {
  const Channel id = Channel::validate({{1.0, 0.0}, {0.0, 1.0}});
  const Distribution uniform2 = Distribution::uniform(2);
  CHECK(pc(uniform2, id, id).value == doctest::Approx(1.0));
  CHECK(pc(uniform2, bsc(0.1), id).value == doctest::Approx(0.9));

  // Point mass: only the best input for that context matters.
  const PcResult res = pc(Distribution({1.0, 0.0}), bsc(0.1), id);
  CHECK(res.value == doctest::Approx(0.9));
  CHECK(res.encoder[0] == 0);

  CHECK_THROWS_AS(pc(uniform2, Channel::validate({{0.2, 0.3, 0.5}}), id), std::invalid_argument);
}

TEST_CASE("pc equals the grid supremum over random encoders") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Rng rng(mix_seed(202, s));
    const std::size_t u = 1 + rng.uniform_index(3);
    const std::size_t x = 1 + rng.uniform_index(3);
    const std::size_t y = 1 + rng.uniform_index(3);
    const Distribution prior(rng.simplex_point(u));
    const Channel w = gen_random_channel(x, y, rng.next_u64());
    const Channel dec = gen_random_channel(y, u, rng.next_u64());
    CHECK(std::abs(pc(prior, w, dec).value - oracle::grid_sup_pc(prior, w, dec, 0.05)) <= 1e-9);
  }
}

TEST_CASE("capacity of binary symmetric channels") {
  CHECK(capacity(bsc(0.0)) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  CHECK(capacity(bsc(0.5)) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(std::abs(capacity(bsc(0.1)) - oracle::bsc_capacity_nats(0.1)) <= 1e-6);
  CHECK(capacity(Channel::validate({{0.3, 0.7}})) == doctest::Approx(0.0));
}

TEST_CASE("capacity and pe_opt are invariant across an equivalence class") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(mix_seed(303, s));
    const std::size_t nx = 1 + rng.uniform_index(3);
    const Channel w = gen_random_channel(nx, 1 + rng.uniform_index(3), rng.next_u64());
    const Channel eq = compose(w, deterministic(gen_random_surjection(nx + 1, nx, rng), nx));
    CHECK(std::abs(capacity(w) - capacity(eq)) <= 1e-6);
    CHECK(std::abs(pe_opt(w, 2, 2) - pe_opt(eq, 2, 2)) <= 1e-9);
  }
}
