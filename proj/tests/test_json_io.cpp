#include <doctest.h>

#include <stdexcept>

#include "chanorder/json_io.hpp"
#include "chanorder/random.hpp"
#include "chanorder/suites.hpp"

using namespace chanorder;

TEST_CASE("channel round trip is field-exact and byte-stable") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    Rng rng(mix_seed(808, s));
    const Channel w = gen_random_channel(1 + rng.uniform_index(4), 1 + rng.uniform_index(4),
                                         rng.next_u64());
    const std::string text = canonical_dump(channel_to_json(w));
    const Channel back = channel_from_json(Json::parse(text));
    CHECK(back == w);
    CHECK(canonical_dump(channel_to_json(back)) == text);
  }
}

TEST_CASE("canonical dump is idempotent on reparse") {
  const Json j = Json{{"a", 0.1}, {"b", 1.0}, {"c", Json::array({1, 2.5, "x"})}, {"z", nullptr}};
  const std::string once = canonical_dump(j);
  const std::string twice = canonical_dump(Json::parse(once));
  CHECK(once == twice);
  CHECK(once.back() == '\n');
  // Floats keep a decimal marker so typing survives the round trip.
  CHECK(once.find("\"b\":1.0") != std::string::npos);
}

TEST_CASE("tagged and paired symbols survive serialization") {
  const Channel s = channel_sum(bsc(0.1), Channel::validate({{0.2, 0.3, 0.5}}));
  const Channel p = channel_product(bsc(0.1), bsc(0.2));
  CHECK(channel_from_json(Json::parse(canonical_dump(channel_to_json(s)))) == s);
  CHECK(channel_from_json(Json::parse(canonical_dump(channel_to_json(p)))) == p);
}

TEST_CASE("characteristic serialization keeps canonical order") {
  const Characteristic ce = characteristic(Channel::validate({{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}}));
  const Characteristic back = characteristic_from_json(Json::parse(canonical_dump(characteristic_to_json(ce))));
  REQUIRE(back.points.size() == ce.points.size());
  for (std::size_t i = 0; i < ce.points.size(); ++i) CHECK(back.points[i] == ce.points[i]);
}

TEST_CASE("decoder schema: comma tuples, 1-based ids, totality enforced") {
  const Decoder d = gen_random_decoder(3, 2, 2, 123);
  const Json j = decoder_to_json(d);
  CHECK(j.at("table").size() == 9);
  const Decoder back = decoder_from_json(j);
  CHECK(back.table == d.table);
  CHECK(back.output_size == 3);

  Json broken = j;
  broken["table"].erase(broken["table"].begin());
  CHECK_THROWS_AS(decoder_from_json(broken), std::invalid_argument);

  Json bad_id = j;
  bad_id["table"]["1,1"] = 5;
  CHECK_THROWS_AS(decoder_from_json(bad_id), std::invalid_argument);
}

TEST_CASE("encoder schema mirrors the decoder") {
  const Encoder e = gen_random_encoder(3, 2, 4, 321);
  const Encoder back = encoder_from_json(encoder_to_json(e));
  CHECK(back.table == e.table);
}

TEST_CASE("game serialization embeds the channel") {
  Rng rng(77);
  const Channel w = gen_random_channel(2, 3, rng.next_u64());
  std::vector<std::vector<double>> payoff(2, std::vector<double>(3));
  for (auto& row : payoff) {
    for (double& v : row) v = rng.uniform(-1.0, 1.0);
  }
  const RandomizedGame g(2, payoff, w);
  const RandomizedGame back = game_from_json(Json::parse(canonical_dump(game_to_json(g))));
  CHECK(back.z_size == g.z_size);
  CHECK(back.payoff == g.payoff);
  CHECK(back.randomizer == g.randomizer);
}

TEST_CASE("degradedness results serialize either certificate") {
  const Json yes = degradedness_to_json(is_input_degraded(bsc(0.1), Channel::validate({{1, 0}, {0, 1}})));
  CHECK(yes.at("degraded").get<bool>());
  CHECK(yes.contains("intertwiner"));

  const Json no = degradedness_to_json(is_input_degraded(Channel::validate({{1, 0}, {0, 1}}), bsc(0.1)));
  CHECK_FALSE(no.at("degraded").get<bool>());
  CHECK(no.contains("refutation"));
  CHECK(no.at("refutation").at("gap").get<double>() > 0.0);
}
