#include "chanorder/coding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace chanorder {

namespace {

// a^b with overflow saturation, for cap checks.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

// Advances a base-`radix` tuple (least significant digit last); returns
// false after wrapping past the largest tuple.
bool next_tuple(std::vector<std::size_t>& t, std::size_t radix) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < radix) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

void Decoder::check() const {
  if (blocklength == 0 || message_count == 0 || output_size == 0) {
    throw std::invalid_argument("Decoder: n, M and |Y| must all be positive");
  }
  const std::uint64_t expect = checked_pow(output_size, blocklength);
  if (table.size() != expect) {
    throw std::invalid_argument("Decoder: table must cover all |Y|^n output tuples");
  }
  for (std::size_t id : table) {
    if (id >= message_count) throw std::invalid_argument("Decoder: message id out of range");
  }
}

void Encoder::check() const {
  if (blocklength == 0 || message_count == 0) {
    throw std::invalid_argument("Encoder: n and M must be positive");
  }
  if (table.size() != message_count) {
    throw std::invalid_argument("Encoder: table must have one codeword per message");
  }
  for (const auto& cw : table) {
    if (cw.size() != blocklength) {
      throw std::invalid_argument("Encoder: codeword length differs from the blocklength");
    }
  }
}

double pe_decoder_ml(const Channel& w, const Decoder& d, std::uint64_t cap) {
  d.check();
  if (d.output_size != w.output_size()) {
    throw std::invalid_argument("pe_decoder_ml: decoder output alphabet does not match the channel");
  }
  const std::size_t n = d.blocklength;
  const std::uint64_t x_count = checked_pow(w.input_size(), n);
  if (x_count > cap) {
    throw std::invalid_argument("pe_decoder_ml: |X|^n exceeds the enumeration cap");
  }

  // Decision regions per message.
  std::vector<std::vector<std::size_t>> region(d.message_count);
  for (std::size_t code = 0; code < d.table.size(); ++code) region[d.table[code]].push_back(code);

  // Decode tuple indices into symbol tuples once.
  const std::size_t y_count = d.table.size();
  std::vector<std::size_t> ydigits(y_count * n);
  {
    std::vector<std::size_t> t(n, 0);
    for (std::size_t code = 0; code < y_count; ++code) {
      for (std::size_t i = 0; i < n; ++i) ydigits[code * n + i] = t[i];
      next_tuple(t, d.output_size);
    }
  }

  double success = 0.0;
  for (std::size_t m = 0; m < d.message_count; ++m) {
    double best = 0.0;  // empty regions contribute zero regardless of x^n
    if (!region[m].empty()) {
      best = -std::numeric_limits<double>::infinity();
      std::vector<std::size_t> x(n, 0);
      bool more = true;
      while (more) {
        double mass = 0.0;
        for (std::size_t code : region[m]) {
          double p = 1.0;
          for (std::size_t i = 0; i < n; ++i) p *= w.row(x[i])[ydigits[code * n + i]];
          mass += p;
        }
        best = std::max(best, mass);
        more = next_tuple(x, w.input_size());
      }
    }
    success += best;
  }
  return 1.0 - success / static_cast<double>(d.message_count);
}

double pe_encoder(const Channel& w, const Encoder& e, std::uint64_t cap) {
  e.check();
  for (const auto& cw : e.table) {
    for (std::size_t x : cw) {
      if (x >= w.input_size()) {
        throw std::invalid_argument("pe_encoder: codeword symbol outside the channel input alphabet");
      }
    }
  }
  const std::size_t n = e.blocklength;
  const std::uint64_t y_count = checked_pow(w.output_size(), n);
  if (y_count > cap) {
    throw std::invalid_argument("pe_encoder: |Y|^n exceeds the enumeration cap");
  }

  double success = 0.0;
  std::vector<std::size_t> y(n, 0);
  bool more = true;
  while (more) {
    double best = 0.0;
    for (std::size_t m = 0; m < e.message_count; ++m) {
      double p = 1.0;
      for (std::size_t i = 0; i < n; ++i) p *= w.row(e.table[m][i])[y[i]];
      best = std::max(best, p);
    }
    success += best;
    more = next_tuple(y, w.output_size());
  }
  return 1.0 - success / static_cast<double>(e.message_count);
}

double pe_opt(const Channel& w, std::size_t n, std::size_t m, std::uint64_t cap) {
  if (n == 0 || m == 0) throw std::invalid_argument("pe_opt: n and M must be positive");
  const std::uint64_t encoder_count = checked_pow(w.input_size(), n * m);
  if (encoder_count > cap) {
    throw std::invalid_argument("pe_opt: |X|^{nM} exceeds the enumeration cap");
  }

  Encoder e;
  e.blocklength = n;
  e.message_count = m;
  e.table.assign(m, std::vector<std::size_t>(n, 0));
  // The encoder table is one base-|X| tuple of length n*M.
  std::vector<std::size_t> flat(n * m, 0);
  double best = 1.0;
  bool more = true;
  while (more) {
    for (std::size_t msg = 0; msg < m; ++msg) {
      for (std::size_t i = 0; i < n; ++i) e.table[msg][i] = flat[msg * n + i];
    }
    best = std::min(best, pe_encoder(w, e, cap));
    more = next_tuple(flat, w.input_size());
  }
  return best;
}

PcResult pc(const Distribution& prior, const Channel& w, const Channel& decoder) {
  if (decoder.input_size() != w.output_size()) {
    throw std::invalid_argument("pc: decoder input must be the channel output alphabet");
  }
  if (prior.size() != decoder.output_size()) {
    throw std::invalid_argument("pc: prior must live on the decoder output alphabet");
  }
  const std::size_t u_count = prior.size();
  PcResult out;
  out.encoder.resize(u_count);
  for (std::size_t u = 0; u < u_count; ++u) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_x = 0;
    for (std::size_t x = 0; x < w.input_size(); ++x) {
      double v = 0.0;
      for (std::size_t y = 0; y < w.output_size(); ++y) v += w.row(x)[y] * decoder.row(y)[u];
      if (v > best + 1e-15) {
        best = v;
        best_x = x;
      }
    }
    out.encoder[u] = best_x;
    out.value += prior[u] * best;
  }
  return out;
}

double capacity(const Channel& w, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("capacity: tolerance must be positive");
  const std::size_t nx = w.input_size();
  const std::size_t ny = w.output_size();

  std::vector<double> q(nx, 1.0 / static_cast<double>(nx));
  std::vector<double> r(ny, 0.0);
  std::vector<double> dkl(nx, 0.0);

  const std::size_t max_iter = 1u << 20;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::fill(r.begin(), r.end(), 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) r[y] += q[x] * w.row(x)[y];
    }
    double lower = 0.0;
    double upper = -std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < nx; ++x) {
      double d = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        const double p = w.row(x)[y];
        if (p > 0.0) d += p * std::log(p / r[y]);
      }
      dkl[x] = d;
      lower += q[x] * d;
      upper = std::max(upper, d);
    }
    if (upper - lower < tol) {
      return std::max(0.0, 0.5 * (std::max(lower, 0.0) + upper));
    }
    double norm = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      q[x] *= std::exp(dkl[x] - lower);  // shift by the mean for stability
      norm += q[x];
    }
    for (std::size_t x = 0; x < nx; ++x) q[x] /= norm;
  }
  throw std::runtime_error("capacity: Blahut-Arimoto did not converge");
}

}  // namespace chanorder
