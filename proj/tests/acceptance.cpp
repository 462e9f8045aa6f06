// Acceptance suite: ten seeded end-to-end checks, one pass/fail line each.
// Run with no arguments for all ten, or pass criterion numbers to run a
// subset. Exit code 0 iff every requested criterion passes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chanorder/coding.hpp"
#include "chanorder/games.hpp"
#include "chanorder/geometry.hpp"
#include "chanorder/oracles.hpp"
#include "chanorder/ordering.hpp"
#include "chanorder/random.hpp"
#include "chanorder/suites.hpp"

using namespace chanorder;

namespace {

constexpr std::uint64_t kSeed = 20240;

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (first.empty()) first = what;
  }
  bool ok() const { return failed == 0; }
  std::string summary() const {
    std::ostringstream os;
    if (failed == 0) {
      os << checked << " checks";
    } else {
      os << failed << "/" << checked << " failed; first: " << first;
    }
    return os.str();
  }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double v = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
  return v;
}

DegradedPair criterion1_pair(std::size_t c) {
  Rng rng(mix_seed(kSeed, 1000 + c));
  return make_degraded_pair(1 + rng.uniform_index(5), 1 + rng.uniform_index(5),
                            1 + rng.uniform_index(4), rng.next_u64());
}

// 1. W = W' o V' is reported degraded; the recovered intertwiner reproduces
//    W within 1e-7 in d_{X,Y}. 200 seeded pairs, |X|,|X'| <= 5, |Y| <= 4.
Tally criterion_soundness() {
  Tally t;
  for (std::size_t c = 0; c < 200; ++c) {
    const DegradedPair pair = criterion1_pair(c);
    const DegradednessResult res = is_input_degraded(pair.w, pair.w_prime);
    if (!res.degraded) {
      t.expect(false, "constructed degraded pair refuted");
      continue;
    }
    t.expect(channel_distance(compose(pair.w_prime, *res.intertwiner), pair.w) <= 1e-7,
             "recovered intertwiner misses W beyond 1e-7");
  }
  return t;
}

// 2. 200 planted non-degraded pairs: the separating payoff obeys its strict
//    gap within 1e-7 and check_bss converts it into a (c)-violating game.
Tally criterion_refutation() {
  Tally t;
  for (std::size_t c = 0; c < 200; ++c) {
    Rng rng(mix_seed(kSeed, 2000 + c));
    const RefutedPair pair = make_refuted_pair(1 + rng.uniform_index(5), 1 + rng.uniform_index(5),
                                               2 + rng.uniform_index(3), rng.next_u64());
    const DegradednessResult res = is_input_degraded(pair.w, pair.w_prime);
    if (res.degraded) {
      t.expect(false, "planted pair reported degraded");
      continue;
    }
    const Refutation& ref = *res.refutation;
    double best = -1e300;
    for (std::size_t x = 0; x < pair.w_prime.input_size(); ++x) {
      best = std::max(best, dot(ref.payoff, pair.w_prime.row(x).probs()));
    }
    const double mine = dot(ref.payoff, pair.w.row(ref.row_index).probs());
    t.expect(ref.gap > 0.0 && mine > best + ref.gap - 1e-7,
             "separating payoff violates its strict-gap inequality");

    const BssReport report = check_bss(pair.w, pair.w_prime, 1, rng.next_u64());
    t.expect(!report.degraded && report.witness.has_value() && report.passed,
             "check_bss failed to produce a violating game");
  }
  return t;
}

// 3. Decoder monotonicity over criterion-1's pairs, 20 random decoders each
//    (n <= 2, M <= 3); equality on Lemma-2 equivalent pairs.
Tally criterion_decoder_monotonicity() {
  Tally t;
  for (std::size_t c = 0; c < 200; ++c) {
    const DegradedPair pair = criterion1_pair(c);
    Rng rng(mix_seed(kSeed, 3000 + c));
    const std::size_t y = pair.w.output_size();
    for (std::size_t k = 0; k < 20; ++k) {
      const Decoder d = gen_random_decoder(y, 1 + rng.uniform_index(2), 1 + rng.uniform_index(3),
                                           rng.next_u64());
      t.expect(pe_decoder_ml(pair.w_prime, d) <= pe_decoder_ml(pair.w, d) + 1e-9,
               "P_e under the stronger channel exceeded the weaker one");
    }
    const std::size_t nx = pair.w.input_size();
    const Channel equiv =
        compose(pair.w, deterministic(gen_random_surjection(nx + 1 + rng.uniform_index(2), nx, rng), nx));
    const Decoder d = gen_random_decoder(y, 1 + rng.uniform_index(2), 1 + rng.uniform_index(3),
                                         rng.next_u64());
    t.expect(std::abs(pe_decoder_ml(pair.w, d) - pe_decoder_ml(equiv, d)) <= 1e-9,
             "P_e differs across an input-equivalent pair");
  }
  return t;
}

// 4. Guessing-probability monotonicity: 1000 random (p, D) per degraded pair.
Tally criterion_guessing_monotonicity() {
  Tally t;
  for (std::size_t c = 0; c < 200; ++c) {
    const DegradedPair pair = criterion1_pair(c);
    Rng rng(mix_seed(kSeed, 4000 + c));
    const std::size_t y = pair.w.output_size();
    for (std::size_t k = 0; k < 1000; ++k) {
      const std::size_t u = 1 + rng.uniform_index(3);
      const Distribution prior(rng.simplex_point(u));
      const Channel dec = gen_random_channel(y, u, rng.next_u64());
      t.expect(pc(prior, pair.w, dec).value <= pc(prior, pair.w_prime, dec).value + 1e-9,
               "P_c under the stronger channel exceeded the weaker one");
    }
  }
  return t;
}

// 5. check_bss: 50 degraded pairs x 20 games pass both region inclusion
//    and payoff domination; 50 refuted pairs each produce a violating game.
Tally criterion_games_consistency() {
  Tally t;
  for (std::size_t c = 0; c < 50; ++c) {
    Rng rng(mix_seed(kSeed, 5000 + c));
    const DegradedPair pair = make_degraded_pair(1 + rng.uniform_index(4), 1 + rng.uniform_index(4),
                                                 1 + rng.uniform_index(3), rng.next_u64());
    const BssReport report = check_bss(pair.w, pair.w_prime, 20, rng.next_u64());
    t.expect(report.degraded && report.passed, "a sampled game failed inclusion or the inequality");
  }
  for (std::size_t c = 0; c < 50; ++c) {
    Rng rng(mix_seed(kSeed, 5500 + c));
    const RefutedPair pair = make_refuted_pair(1 + rng.uniform_index(4), 1 + rng.uniform_index(4),
                                               2 + rng.uniform_index(2), rng.next_u64());
    const BssReport report = check_bss(pair.w, pair.w_prime, 1, rng.next_u64());
    if (report.degraded || !report.witness) {
      t.expect(false, "refuted pair yielded no witness game");
      continue;
    }
    const BssWitness& wit = *report.witness;
    t.expect(wit.opt_payoff_lhs > wit.opt_payoff_rhs + wit.gap * (1.0 - 1e-6) && report.passed,
             "witness game does not violate condition (c)");
  }
  return t;
}

// 6. Similarity metric: BSC closed form, metric axioms, zero iff
//    equivalence, domination by d_{X,Y}, and a grid-sampled Hausdorff
//    oracle at |Y| = 3.
Tally criterion_similarity() {
  Tally t;
  t.expect(std::abs(similarity_distance(bsc(0.1), bsc(0.2)) - 0.1) <= 1e-7,
           "BSC similarity deviates from the interval closed form");

  for (std::size_t c = 0; c < 300; ++c) {
    Rng rng(mix_seed(kSeed, 6000 + c));
    const Channel a = gen_random_channel(1 + rng.uniform_index(4), 3, rng.next_u64());
    const Channel b = gen_random_channel(1 + rng.uniform_index(4), 3, rng.next_u64());
    const Channel d = gen_random_channel(1 + rng.uniform_index(4), 3, rng.next_u64());
    t.expect(similarity_distance(a, b) == similarity_distance(b, a), "similarity not symmetric");
    t.expect(similarity_distance(a, d) <=
                 similarity_distance(a, b) + similarity_distance(b, d) + 1e-7,
             "similarity triangle inequality fails");
  }

  for (std::size_t c = 0; c < 200; ++c) {
    Rng rng(mix_seed(kSeed, 6400 + c));
    const std::size_t nx = 1 + rng.uniform_index(4);
    const Channel a = gen_random_channel(nx, 1 + rng.uniform_index(3), rng.next_u64());
    if (c % 2 == 0) {
      const Channel eq = compose(
          a, deterministic(gen_random_surjection(nx + rng.uniform_index(2), nx, rng), nx));
      t.expect(similarity_distance(a, eq) <= 1e-8 && is_input_equivalent(a, eq),
               "equivalent pair at positive similarity distance");
    } else {
      const Channel b = gen_random_channel(1 + rng.uniform_index(4), a.output_size(), rng.next_u64());
      const double dv = similarity_distance(a, b);
      t.expect(is_input_equivalent(a, b) == (dv <= 1e-8),
               "similarity zero does not coincide with input-equivalence");
    }
  }

  for (std::size_t c = 0; c < 1000; ++c) {
    Rng rng(mix_seed(kSeed, 6600 + c));
    const std::size_t nx = 1 + rng.uniform_index(4);
    const std::size_t ny = 1 + rng.uniform_index(4);
    const Channel a = gen_random_channel(nx, ny, rng.next_u64());
    const Channel b = gen_random_channel(nx, ny, rng.next_u64());
    t.expect(similarity_distance(a, b) <= channel_distance(a, b) + 1e-9,
             "similarity exceeds the channel distance");
  }

  for (std::size_t c = 0; c < 50; ++c) {
    Rng rng(mix_seed(kSeed, 6800 + c));
    const Channel a = gen_random_channel(2 + rng.uniform_index(2), 3, rng.next_u64());
    const Channel b = gen_random_channel(2 + rng.uniform_index(2), 3, rng.next_u64());
    std::vector<std::vector<double>> ra, rb;
    for (const auto& r : a.rows()) ra.push_back(r.probs());
    for (const auto& r : b.rows()) rb.push_back(r.probs());
    const double grid = oracle::grid_hausdorff_tv(ra, rb, 1e-2);
    t.expect(std::abs(similarity_distance(a, b) - grid) <= 2e-2,
             "similarity deviates from the grid-sampled Hausdorff oracle");
  }
  return t;
}

// 7. Rank bounds: |Y| = 1 forces rank 1; |Y| = 2 caps the rank at 2.
Tally criterion_rank() {
  Tally t;
  for (std::size_t c = 0; c < 1000; ++c) {
    Rng rng(mix_seed(kSeed, 7000 + c));
    const Channel w1 = gen_random_channel(1 + rng.uniform_index(6), 1, rng.next_u64());
    t.expect(input_rank(w1) == 1, "|Y|=1 channel with rank above 1");
    const Channel w2 = gen_random_channel(1 + rng.uniform_index(6), 2, rng.next_u64());
    t.expect(input_rank(w2) <= 2, "|Y|=2 channel with rank above 2");
  }
  return t;
}

// 8. Capacity and optimal error probability are class invariants; BSC(0.1)
//    capacity matches the closed form.
Tally criterion_invariance() {
  Tally t;
  t.expect(std::abs(capacity(bsc(0.1)) - oracle::bsc_capacity_nats(0.1)) <= 1e-6,
           "BSC(0.1) capacity deviates from the closed form");
  for (std::size_t c = 0; c < 100; ++c) {
    Rng rng(mix_seed(kSeed, 8000 + c));
    const std::size_t nx = 1 + rng.uniform_index(3);
    const Channel w = gen_random_channel(nx, 1 + rng.uniform_index(3), rng.next_u64());
    const Channel eq = compose(
        w, deterministic(gen_random_surjection(nx + rng.uniform_index(2), nx, rng), nx));
    t.expect(std::abs(capacity(w) - capacity(eq)) <= 1e-6,
             "capacity differs across an equivalent pair");
    const std::size_t nm[][2] = {{1, 2}, {2, 2}, {2, 3}};
    for (const auto& p : nm) {
      t.expect(std::abs(pe_opt(w, p[0], p[1]) - pe_opt(eq, p[0], p[1])) <= 1e-9,
               "pe_opt differs across an equivalent pair");
    }
  }
  return t;
}

// 9. Hull identities for channel sums and products: 500 membership queries
//    each, cross-checked against the direct row-hull LP.
Tally criterion_hull_identities() {
  Tally t;
  for (std::size_t c = 0; c < 500; ++c) {
    Rng rng(mix_seed(kSeed, 9000 + c));
    const Channel w1 = gen_random_channel(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                          rng.next_u64());
    const Channel w2 = gen_random_channel(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                          rng.next_u64());
    const Channel s = channel_sum(w1, w2);
    const Characteristic c1 = characteristic(w1);
    const Characteristic c2 = characteristic(w2);

    std::vector<double> q(s.output_size(), 0.0);
    if (rng.uniform() < 0.5) {
      const std::vector<double> mix = rng.simplex_point(s.input_size());
      for (std::size_t x = 0; x < s.input_size(); ++x) {
        for (std::size_t y = 0; y < s.output_size(); ++y) q[y] += mix[x] * s.row(x)[y];
      }
    } else {
      q = rng.simplex_point(s.output_size());
    }
    const Distribution qd(q);
    const SumDecomposition dec = decompose_sum_point(qd, s.output_labels(), c1, c2);
    const MembershipResult direct = hull_membership(qd, s.rows());
    t.expect(dec.in_hull == direct.inside, "sum decomposition verdict disagrees with the LP");
    if (dec.in_hull) {
      std::vector<double> rec(s.output_size(), 0.0);
      if (dec.left_weights) {
        for (std::size_t j = 0; j < c1.points.size(); ++j) {
          for (std::size_t y = 0; y < w1.output_size(); ++y) {
            rec[y] += (1.0 - dec.lambda) * (*dec.left_weights)[j] * c1.points[j][y];
          }
        }
      }
      if (dec.right_weights) {
        for (std::size_t j = 0; j < c2.points.size(); ++j) {
          for (std::size_t y = 0; y < w2.output_size(); ++y) {
            rec[w1.output_size() + y] += dec.lambda * (*dec.right_weights)[j] * c2.points[j][y];
          }
        }
      }
      t.expect(l1_distance(rec, qd.probs()) <= 1e-7, "sum decomposition reconstruction drifts");
    }
  }

  for (std::size_t c = 0; c < 500; ++c) {
    Rng rng(mix_seed(kSeed, 9500 + c));
    const Channel w1 = gen_random_channel(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                          rng.next_u64());
    const Channel w2 = gen_random_channel(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                          rng.next_u64());
    const Channel p = channel_product(w1, w2);
    const Characteristic c1 = characteristic(w1);
    const Characteristic c2 = characteristic(w2);

    std::vector<double> q(p.output_size(), 0.0);
    if (rng.uniform() < 0.5) {
      const std::vector<double> mix = rng.simplex_point(p.input_size());
      for (std::size_t x = 0; x < p.input_size(); ++x) {
        for (std::size_t y = 0; y < p.output_size(); ++y) q[y] += mix[x] * p.row(x)[y];
      }
    } else {
      q = rng.simplex_point(p.output_size());
    }
    const Distribution qd(q);
    const MembershipResult via_ce = product_hull_membership(qd, p.output_labels(), c1, c2);
    const MembershipResult direct = hull_membership(qd, p.rows());
    t.expect(via_ce.inside == direct.inside, "product hull verdict disagrees with the LP");
    if (via_ce.inside) {
      std::vector<double> rec(p.output_size(), 0.0);
      std::size_t g = 0;
      for (std::size_t i = 0; i < c1.points.size(); ++i) {
        for (std::size_t j = 0; j < c2.points.size(); ++j, ++g) {
          for (std::size_t y1 = 0; y1 < w1.output_size(); ++y1) {
            for (std::size_t y2 = 0; y2 < w2.output_size(); ++y2) {
              rec[y1 * w2.output_size() + y2] +=
                  via_ce.weights[g] * c1.points[i][y1] * c2.points[j][y2];
            }
          }
        }
      }
      t.expect(l1_distance(rec, qd.probs()) <= 1e-7, "product reconstruction drifts");
    }
  }
  return t;
}

// 10. Lipschitz bounds for sums and products of equivalence classes.
Tally criterion_lipschitz() {
  Tally t;
  for (std::size_t c = 0; c < 300; ++c) {
    Rng rng(mix_seed(kSeed, 10000 + c));
    const std::size_t y1 = 1 + rng.uniform_index(3);
    const std::size_t y2 = 1 + rng.uniform_index(3);
    const Channel w1 = gen_random_channel(1 + rng.uniform_index(3), y1, rng.next_u64());
    const Channel w1p = gen_random_channel(1 + rng.uniform_index(3), y1, rng.next_u64());
    const Channel w2 = gen_random_channel(1 + rng.uniform_index(3), y2, rng.next_u64());
    const Channel w2p = gen_random_channel(1 + rng.uniform_index(3), y2, rng.next_u64());
    const double bound = similarity_distance(w1, w1p) + similarity_distance(w2, w2p) + 1e-7;
    t.expect(similarity_distance(channel_sum(w1, w2), channel_sum(w1p, w2p)) <= bound,
             "sum Lipschitz bound fails");
    t.expect(similarity_distance(channel_product(w1, w2), channel_product(w1p, w2p)) <= bound,
             "product Lipschitz bound fails");
  }
  return t;
}

struct Criterion {
  int id;
  const char* title;
  Tally (*run)();
};

const Criterion kCriteria[] = {
    {1, "degradedness soundness (intertwiner recovery)", criterion_soundness},
    {2, "degradedness refutation (separating payoffs)", criterion_refutation},
    {3, "decoder error monotonicity", criterion_decoder_monotonicity},
    {4, "guessing probability monotonicity", criterion_guessing_monotonicity},
    {5, "randomized-game characterization", criterion_games_consistency},
    {6, "similarity metric", criterion_similarity},
    {7, "rank bounds for small output alphabets", criterion_rank},
    {8, "capacity and pe_opt class invariance", criterion_invariance},
    {9, "sum/product hull identities", criterion_hull_identities},
    {10, "sum/product Lipschitz bounds", criterion_lipschitz},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  bool all_ok = true;
  for (const Criterion& crit : kCriteria) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), crit.id) == wanted.end()) {
      continue;
    }
    const Tally t = crit.run();
    all_ok = all_ok && t.ok();
    std::cout << (t.ok() ? "[PASS]" : "[FAIL]") << " criterion " << crit.id << ": " << crit.title
              << " (" << t.summary() << ")\n";
  }
  return all_ok ? 0 : 1;
}
