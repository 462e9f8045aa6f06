#include "chanorder/random.hpp"

#include <cmath>
#include <stdexcept>

namespace chanorder {

std::uint64_t Rng::splitmix() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next_u64() { return splitmix(); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::uniform_index: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return static_cast<std::size_t>(v % n);
}

std::vector<double> Rng::simplex_point(std::size_t k) {
  if (k == 0) throw std::invalid_argument("Rng::simplex_point: empty alphabet");
  std::vector<double> v(k);
  double sum = 0.0;
  for (double& e : v) {
    e = -std::log(1.0 - uniform());  // exponential draw, uniform() < 1
    sum += e;
  }
  for (double& e : v) e /= sum;
  return v;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  Rng r(seed ^ (0x853c49e6748fea9bULL + stream * 0xda3e39cb94b95bdbULL));
  return r.next_u64();
}

Channel gen_random_channel(std::size_t inputs, std::size_t outputs, std::uint64_t seed) {
  if (inputs == 0 || outputs == 0) {
    throw std::invalid_argument("gen_random_channel: alphabet sizes must be positive");
  }
  Rng rng(seed);
  std::vector<std::vector<double>> rows(inputs);
  for (auto& r : rows) r = rng.simplex_point(outputs);
  return Channel::validate(rows);
}

Decoder gen_random_decoder(std::size_t output_size, std::size_t n, std::size_t m,
                           std::uint64_t seed) {
  if (output_size == 0 || n == 0 || m == 0) {
    throw std::invalid_argument("gen_random_decoder: sizes must be positive");
  }
  Rng rng(seed);
  Decoder d;
  d.blocklength = n;
  d.message_count = m;
  d.output_size = output_size;
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= output_size;
  d.table.resize(count);
  for (auto& id : d.table) id = rng.uniform_index(m);
  d.check();
  return d;
}

Encoder gen_random_encoder(std::size_t input_size, std::size_t n, std::size_t m,
                           std::uint64_t seed) {
  if (input_size == 0 || n == 0 || m == 0) {
    throw std::invalid_argument("gen_random_encoder: sizes must be positive");
  }
  Rng rng(seed);
  Encoder e;
  e.blocklength = n;
  e.message_count = m;
  e.table.assign(m, std::vector<std::size_t>(n, 0));
  for (auto& cw : e.table) {
    for (auto& x : cw) x = rng.uniform_index(input_size);
  }
  e.check();
  return e;
}

std::vector<std::size_t> gen_random_surjection(std::size_t domain, std::size_t codomain, Rng& rng) {
  if (codomain == 0 || domain < codomain) {
    throw std::invalid_argument("gen_random_surjection: domain must cover the codomain");
  }
  // Hit every target once, fill the rest uniformly, then shuffle.
  std::vector<std::size_t> f(domain);
  for (std::size_t i = 0; i < codomain; ++i) f[i] = i;
  for (std::size_t i = codomain; i < domain; ++i) f[i] = rng.uniform_index(codomain);
  for (std::size_t i = domain; i-- > 1;) {
    std::size_t j = rng.uniform_index(i + 1);
    std::swap(f[i], f[j]);
  }
  return f;
}

}  // namespace chanorder
