#include "chanorder/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "chanorder/coding.hpp"
#include "chanorder/games.hpp"
#include "chanorder/geometry.hpp"
#include "chanorder/oracles.hpp"
#include "chanorder/ordering.hpp"
#include "chanorder/random.hpp"

namespace chanorder {

namespace {

// Accumulates per-case verdicts for one named invariant.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, std::size_t case_index, const std::string& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (first_failure_.empty()) {
      std::ostringstream os;
      os << "case " << case_index << ": " << what;
      first_failure_ = os.str();
    }
  }

  CheckResult result() const {
    CheckResult r;
    r.name = name_;
    r.passed = failures_ == 0;
    std::ostringstream os;
    if (failures_ == 0) {
      os << cases_ << " assertions";
    } else {
      os << failures_ << "/" << cases_ << " failed; first: " << first_failure_;
    }
    r.detail = os.str();
    return r;
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double v = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
  return v;
}

double max_entry_diff(const Channel& a, const Channel& b) {
  double worst = 0.0;
  for (std::size_t x = 0; x < a.input_size(); ++x) {
    for (std::size_t y = 0; y < a.output_size(); ++y) {
      worst = std::max(worst, std::abs(a.row(x)[y] - b.row(x)[y]));
    }
  }
  return worst;
}

// Distinct stream bases so every check draws an independent seeded stream.
enum Stream : std::uint64_t {
  kGeoSound = 101, kGeoOracle, kGeoIdem, kGeoHausdorff, kGeoReduction,
  kChanAssoc = 201, kChanMetric, kChanStoch, kChanSumCompat,
  kOrdSound = 301, kOrdRefuted, kOrdTrans, kOrdRoundTrip, kOrdMetric,
  kOrdDomination, kOrdRank, kOrdLipschitz, kOrdPreserve, kOrdSumHull, kOrdProdHull,
  kCodDecoderMono = 401, kCodGuessMono, kCodShannon, kCodPcGrid, kCodPeOptMono,
  kGamAffine = 501, kGamOptVert, kGamForward, kGamWitness,
};

// ---------------------------------------------------------------------------
// geometry
// ---------------------------------------------------------------------------

CheckResult geometry_certificate_soundness(std::uint64_t seed) {
  Check check("geometry/certificate-soundness");
  for (std::size_t c = 0; c < 1000; ++c) {
    Rng rng(mix_seed(seed, kGeoSound * 10007 + c));
    const std::size_t dim = 1 + rng.uniform_index(6);
    const std::size_t k = 1 + rng.uniform_index(6);
    std::vector<std::vector<double>> gens(k);
    for (auto& g : gens) g = rng.simplex_point(dim);
    std::vector<double> q;
    if (rng.uniform() < 0.5) {
      const std::vector<double> w = rng.simplex_point(k);
      q.assign(dim, 0.0);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t y = 0; y < dim; ++y) q[y] += w[j] * gens[j][y];
      }
    } else {
      q = rng.simplex_point(dim);
    }

    const MembershipResult mem = hull_membership(q, gens);
    if (mem.inside) {
      std::vector<double> rec(dim, 0.0);
      double wsum = 0.0;
      bool nonneg = true;
      for (std::size_t j = 0; j < k; ++j) {
        nonneg = nonneg && mem.weights[j] >= -1e-12;
        wsum += mem.weights[j];
        for (std::size_t y = 0; y < dim; ++y) rec[y] += mem.weights[j] * gens[j][y];
      }
      check.expect(nonneg && std::abs(wsum - 1.0) <= 1e-9 && l1_distance(rec, q) <= 1e-7, c,
                   "inside certificate fails to reconstruct the query");
    } else {
      const Separator& s = *mem.separator;
      double best = -1e300;
      for (const auto& g : gens) best = std::max(best, dot(s.functional, g));
      check.expect(s.gap > 0.0 && dot(s.functional, q) >= best + s.gap - 1e-12, c,
                   "outside certificate violates the strict gap inequality");
    }
  }
  return check.result();
}

CheckResult geometry_oracle_agreement(std::uint64_t seed) {
  Check check("geometry/oracle-agreement");
  for (std::size_t c = 0; c < 500; ++c) {
    Rng rng(mix_seed(seed, kGeoOracle * 10007 + c));
    const std::size_t dim = 1 + rng.uniform_index(3);
    const std::size_t k = 1 + rng.uniform_index(3);
    std::vector<std::vector<double>> gens(k);
    for (auto& g : gens) g = rng.simplex_point(dim);
    std::vector<double> q;
    if (rng.uniform() < 0.5) {
      const std::vector<double> w = rng.simplex_point(k);
      q.assign(dim, 0.0);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t y = 0; y < dim; ++y) q[y] += w[j] * gens[j][y];
      }
    } else {
      q = rng.simplex_point(dim);
    }

    const MembershipResult mem = hull_membership(q, gens);
    const double grid = oracle::grid_min_l1_to_hull(q, gens, 1e-3);
    if (mem.inside) {
      check.expect(grid <= 2e-3, c, "LP says inside but the grid distance exceeds the slack");
    } else {
      check.expect(grid >= mem.separator->gap - 1e-12, c,
                   "LP says outside but the grid finds a closer point than the gap allows");
    }
  }
  return check.result();
}

CheckResult geometry_extreme_idempotence(std::uint64_t seed) {
  Check check("geometry/extreme-idempotence");
  for (std::size_t c = 0; c < 300; ++c) {
    Rng rng(mix_seed(seed, kGeoIdem * 10007 + c));
    const std::size_t dim = 1 + rng.uniform_index(4);
    const std::size_t n = 1 + rng.uniform_index(8);
    std::vector<Distribution> pts;
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(rng.simplex_point(dim));
    // Salt with duplicates and midpoints.
    if (n >= 2) {
      pts.push_back(pts[0]);
      std::vector<double> mid(dim);
      for (std::size_t y = 0; y < dim; ++y) mid[y] = 0.5 * (pts[0][y] + pts[1][y]);
      pts.emplace_back(std::move(mid));
    }

    const std::vector<std::size_t> keep = convex_extreme_points(pts);
    std::vector<Distribution> reduced;
    for (std::size_t i : keep) reduced.push_back(pts[i]);
    const std::vector<std::size_t> again = convex_extreme_points(reduced);
    bool all = again.size() == reduced.size();
    for (std::size_t i = 0; all && i < again.size(); ++i) all = again[i] == i;
    check.expect(all, c, "extreme-point extraction is not idempotent");
  }
  return check.result();
}

CheckResult geometry_hausdorff_metric(std::uint64_t seed) {
  Check check("geometry/hausdorff-metric");
  for (std::size_t c = 0; c < 500; ++c) {
    Rng rng(mix_seed(seed, kGeoHausdorff * 10007 + c));
    const std::size_t dim = 2 + rng.uniform_index(3);
    const auto gen_set = [&](std::size_t count) {
      std::vector<Distribution> s;
      for (std::size_t i = 0; i < count; ++i) s.emplace_back(rng.simplex_point(dim));
      return s;
    };
    const auto a = gen_set(1 + rng.uniform_index(5));
    const auto b = gen_set(1 + rng.uniform_index(5));
    const auto cc = gen_set(1 + rng.uniform_index(5));

    const double dab = hausdorff_tv(a, b);
    const double dba = hausdorff_tv(b, a);
    const double dac = hausdorff_tv(a, cc);
    const double dbc = hausdorff_tv(b, cc);
    check.expect(dab == dba, c, "hausdorff_tv is not symmetric");
    check.expect(dab >= 0.0, c, "hausdorff_tv is negative");
    check.expect(dac <= dab + dbc + 1e-7, c, "triangle inequality fails");

    // Zero iff the extreme sets match: permuting and padding with mixtures
    // keeps the hull; moving mass toward a vertex leaves it.
    std::vector<Distribution> same(a.rbegin(), a.rend());
    if (a.size() >= 2) {
      std::vector<double> mid(dim);
      for (std::size_t y = 0; y < dim; ++y) mid[y] = 0.5 * (a[0][y] + a[1][y]);
      same.emplace_back(std::move(mid));
    }
    check.expect(hausdorff_tv(a, same) <= 1e-9, c, "identical hulls at positive distance");

    const Channel interior = gen_interior_channel(2, dim, rng.next_u64());
    std::vector<Distribution> in_rows = interior.rows();
    std::vector<Distribution> outgrown = in_rows;
    outgrown.push_back(Distribution::unit(dim, rng.uniform_index(dim)));
    check.expect(hausdorff_tv(in_rows, outgrown) > 1e-8, c,
                 "strictly larger hull at zero distance");
  }
  return check.result();
}

CheckResult geometry_hull_reduction(std::uint64_t seed) {
  Check check("geometry/hull-reduction");
  for (std::size_t c = 0; c < 300; ++c) {
    Rng rng(mix_seed(seed, kGeoReduction * 10007 + c));
    const std::size_t dim = 2 + rng.uniform_index(3);
    std::vector<Distribution> a, b;
    const std::size_t na = 2 + rng.uniform_index(4);
    const std::size_t nb = 1 + rng.uniform_index(4);
    for (std::size_t i = 0; i < na; ++i) a.emplace_back(rng.simplex_point(dim));
    for (std::size_t i = 0; i < nb; ++i) b.emplace_back(rng.simplex_point(dim));

    const double base = hausdorff_tv(a, b);

    std::vector<Distribution> ce_a, ce_b;
    for (std::size_t i : convex_extreme_points(a)) ce_a.push_back(a[i]);
    for (std::size_t i : convex_extreme_points(b)) ce_b.push_back(b[i]);
    check.expect(hausdorff_tv(ce_a, ce_b) == base, c,
                 "reducing to extreme points changed the value");

    std::vector<Distribution> padded = a;
    for (std::size_t extra = 0; extra < 3; ++extra) {
      const std::vector<double> w = rng.simplex_point(a.size());
      std::vector<double> p(dim, 0.0);
      for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t y = 0; y < dim; ++y) p[y] += w[j] * a[j][y];
      }
      padded.emplace_back(std::move(p));
    }
    check.expect(std::abs(hausdorff_tv(padded, b) - base) <= 1e-9, c,
                 "redundant generators moved the value");
  }
  return check.result();
}

// ---------------------------------------------------------------------------
// channel
// ---------------------------------------------------------------------------

CheckResult channel_compose_assoc(std::uint64_t seed) {
  Check check("channel/compose-associativity");
  for (std::size_t c = 0; c < 200; ++c) {
    Rng rng(mix_seed(seed, kChanAssoc * 10007 + c));
    const std::size_t nx = 1 + rng.uniform_index(4);
    const std::size_t ny = 1 + rng.uniform_index(4);
    const std::size_t nz = 1 + rng.uniform_index(4);
    const std::size_t nt = 1 + rng.uniform_index(4);
    const Channel w = gen_random_channel(nx, ny, rng.next_u64());
    const Channel v = gen_random_channel(ny, nz, rng.next_u64());
    const Channel u = gen_random_channel(nz, nt, rng.next_u64());
    const Channel lhs = compose(u, compose(v, w));
    const Channel rhs = compose(compose(u, v), w);
    check.expect(max_entry_diff(lhs, rhs) <= 1e-12, c, "composition is not associative");
  }
  return check.result();
}

CheckResult channel_metric(std::uint64_t seed) {
  Check check("channel/distance-metric");
  for (std::size_t c = 0; c < 500; ++c) {
    Rng rng(mix_seed(seed, kChanMetric * 10007 + c));
    const std::size_t nx = 1 + rng.uniform_index(4);
    const std::size_t ny = 1 + rng.uniform_index(4);
    const Channel a = gen_random_channel(nx, ny, rng.next_u64());
    const Channel b = gen_random_channel(nx, ny, rng.next_u64());
    const Channel d = gen_random_channel(nx, ny, rng.next_u64());
    check.expect(channel_distance(a, b) == channel_distance(b, a), c, "distance not symmetric");
    check.expect(channel_distance(a, d) <= channel_distance(a, b) + channel_distance(b, d) + 1e-12,
                 c, "triangle inequality fails");
    check.expect(channel_distance(a, a) == 0.0, c, "self-distance is nonzero");
    if (max_entry_diff(a, b) > 2e-9) {
      check.expect(channel_distance(a, b) > 1e-9, c, "distinct channels at zero distance");
    }
  }
  return check.result();
}

CheckResult channel_sum_product_stochastic(std::uint64_t seed) {
  Check check("channel/sum-product-rows");
  for (std::size_t c = 0; c < 200; ++c) {
    Rng rng(mix_seed(seed, kChanStoch * 10007 + c));
    const Channel w1 = gen_random_channel(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                          rng.next_u64());
    const Channel w2 = gen_random_channel(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                          rng.next_u64());
    const Channel s = channel_sum(w1, w2);
    const Channel p = channel_product(w1, w2);

    bool ok = true;
    for (std::size_t x = 0; x < s.input_size(); ++x) {
      double rowsum = 0.0;
      for (std::size_t y = 0; y < s.output_size(); ++y) rowsum += s.row(x)[y];
      ok = ok && std::abs(rowsum - 1.0) <= 1e-12;
      // Block structure: the row restricted to its side equals the factor row.
      if (x < w1.input_size()) {
        for (std::size_t y = 0; y < w1.output_size(); ++y) {
          ok = ok && std::abs(s.row(x)[y] - w1.row(x)[y]) <= 1e-12;
        }
        for (std::size_t y = w1.output_size(); y < s.output_size(); ++y) ok = ok && s.row(x)[y] == 0.0;
      }
    }
    for (std::size_t x1 = 0; x1 < w1.input_size(); ++x1) {
      for (std::size_t x2 = 0; x2 < w2.input_size(); ++x2) {
        const Distribution& row = p.row(x1 * w2.input_size() + x2);
        double rowsum = 0.0;
        for (std::size_t y1 = 0; y1 < w1.output_size(); ++y1) {
          for (std::size_t y2 = 0; y2 < w2.output_size(); ++y2) {
            const double e = row[y1 * w2.output_size() + y2];
            rowsum += e;
            ok = ok && std::abs(e - w1.row(x1)[y1] * w2.row(x2)[y2]) <= 1e-12;
          }
        }
        ok = ok && std::abs(rowsum - 1.0) <= 1e-12;
      }
    }
    check.expect(ok, c, "sum/product rows deviate from the block/outer-product form");
  }
  return check.result();
}

CheckResult channel_sum_compat(std::uint64_t seed) {
  Check check("channel/sum-degradedness-compat");
  for (std::size_t c = 0; c < 100; ++c) {
    Rng rng(mix_seed(seed, kChanSumCompat * 10007 + c));
    const std::size_t x1 = 1 + rng.uniform_index(3), xp1 = 1 + rng.uniform_index(3);
    const std::size_t x2 = 1 + rng.uniform_index(3), xp2 = 1 + rng.uniform_index(3);
    const std::size_t y1 = 1 + rng.uniform_index(3), y2 = 1 + rng.uniform_index(3);
    const Channel w1p = gen_random_channel(xp1, y1, rng.next_u64());
    const Channel w2p = gen_random_channel(xp2, y2, rng.next_u64());
    const Channel v1p = gen_random_channel(x1, xp1, rng.next_u64());
    const Channel v2p = gen_random_channel(x2, xp2, rng.next_u64());
    const Channel lhs = channel_sum(compose(w1p, v1p), compose(w2p, v2p));
    const Channel rhs = compose(channel_sum(w1p, w2p), channel_sum(v1p, v2p));
    check.expect(max_entry_diff(lhs, rhs) <= 1e-12, c,
                 "(W1'oV1') + (W2'oV2') differs from (W1'+W2') o (V1'+V2')");
  }
  return check.result();
}

// ---------------------------------------------------------------------------
// ordering
// ---------------------------------------------------------------------------

CheckResult ordering_soundness(std::uint64_t seed) {
  Check check("ordering/degradedness-soundness");
  for (std::size_t c = 0; c < 200; ++c) {
    Rng rng(mix_seed(seed, kOrdSound * 10007 + c));
    const DegradedPair pair = make_degraded_pair(1 + rng.uniform_index(5), 1 + rng.uniform_index(5),
                                                 1 + rng.uniform_index(4), rng.next_u64());
    const DegradednessResult res = is_input_degraded(pair.w, pair.w_prime);
    if (!res.degraded) {
      check.expect(false, c, "constructed degraded pair reported as refuted");
      continue;
    }
    const double err = channel_distance(compose(pair.w_prime, *res.intertwiner), pair.w);
    check.expect(err <= 1e-7, c, "recovered intertwiner does not reproduce W");
  }
  return check.result();
}

CheckResult ordering_refutation(std::uint64_t seed) {
  Check check("ordering/degradedness-refutation");
  for (std::size_t c = 0; c < 200; ++c) {
    Rng rng(mix_seed(seed, kOrdRefuted * 10007 + c));
    const RefutedPair pair = make_refuted_pair(1 + rng.uniform_index(5), 1 + rng.uniform_index(5),
                                               2 + rng.uniform_index(3), rng.next_u64());
    const DegradednessResult res = is_input_degraded(pair.w, pair.w_prime);
    if (res.degraded) {
      check.expect(false, c, "planted outside row was reported degraded");
      continue;
    }
    const Refutation& ref = *res.refutation;
    double best = -1e300;
    for (std::size_t x = 0; x < pair.w_prime.input_size(); ++x) {
      best = std::max(best, dot(ref.payoff, pair.w_prime.row(x).probs()));
    }
    const double mine = dot(ref.payoff, pair.w.row(ref.row_index).probs());
    check.expect(ref.gap > 0.0 && mine > best + ref.gap * (1.0 - 1e-6), c,
                 "refutation inequality fails");
  }
  return check.result();
}

CheckResult ordering_transitivity(std::uint64_t seed) {
  Check check("ordering/transitivity");
  for (std::size_t c = 0; c < 100; ++c) {
    Rng rng(mix_seed(seed, kOrdTrans * 10007 + c));
    const std::size_t y = 1 + rng.uniform_index(3);
    const Channel cc = gen_random_channel(1 + rng.uniform_index(4), y, rng.next_u64());
    const Channel v2 = gen_random_channel(1 + rng.uniform_index(4), cc.input_size(), rng.next_u64());
    const Channel b = compose(cc, v2);
    const Channel v1 = gen_random_channel(1 + rng.uniform_index(4), b.input_size(), rng.next_u64());
    const Channel a = compose(b, v1);

    const DegradednessResult ab = is_input_degraded(a, b);
    const DegradednessResult bc = is_input_degraded(b, cc);
    const DegradednessResult ac = is_input_degraded(a, cc);
    if (!ab.degraded || !bc.degraded || !ac.degraded) {
      check.expect(false, c, "a constructed chain link was reported refuted");
      continue;
    }
    const Channel composed = compose(*bc.intertwiner, *ab.intertwiner);
    check.expect(channel_distance(compose(cc, composed), a) <= 5e-7, c,
                 "composed intertwiner does not certify the chain");
  }
  return check.result();
}

CheckResult ordering_canonical_roundtrip(std::uint64_t seed) {
  Check check("ordering/canonical-roundtrip");
  for (std::size_t c = 0; c < 500; ++c) {
    Rng rng(mix_seed(seed, kOrdRoundTrip * 10007 + c));
    const Channel w = gen_random_channel(1 + rng.uniform_index(5), 1 + rng.uniform_index(4),
                                         rng.next_u64());
    const Channel rep = canonical_representative(w);
    check.expect(is_input_equivalent(w, rep), c, "w is not equivalent to its representative");
    check.expect(input_rank(rep) == rep.input_size(), c, "representative has redundant rows");
  }
  return check.result();
}

CheckResult ordering_metric_axioms(std::uint64_t seed) {
  Check check("ordering/similarity-metric");
  for (std::size_t c = 0; c < 300; ++c) {
    Rng rng(mix_seed(seed, kOrdMetric * 10007 + c));
    const std::size_t y = 3;
    const Channel a = gen_random_channel(1 + rng.uniform_index(4), y, rng.next_u64());
    const Channel b = gen_random_channel(1 + rng.uniform_index(4), y, rng.next_u64());
    const Channel d = gen_random_channel(1 + rng.uniform_index(4), y, rng.next_u64());
    check.expect(similarity_distance(a, b) == similarity_distance(b, a), c, "not symmetric");
    check.expect(similarity_distance(a, d) <=
                     similarity_distance(a, b) + similarity_distance(b, d) + 1e-7,
                 c, "triangle inequality fails");

    // Zero iff input-equivalent: a vs a padded through a surjection, and a
    // vs an independent channel.
    const std::size_t bigger = a.input_size() + rng.uniform_index(2);
    const Channel padded = compose(a, deterministic(gen_random_surjection(bigger, a.input_size(), rng),
                                                    a.input_size()));
    check.expect(similarity_distance(a, padded) <= 1e-8 && is_input_equivalent(a, padded), c,
                 "equivalent pair at positive similarity distance");
    const double dav = similarity_distance(a, b);
    const bool equiv = is_input_equivalent(a, b);
    check.expect(equiv == (dav <= 1e-8), c, "similarity zero does not match equivalence");
  }
  return check.result();
}

CheckResult ordering_domination(std::uint64_t seed) {
  Check check("ordering/similarity-dominated-by-distance");
  for (std::size_t c = 0; c < 1000; ++c) {
    Rng rng(mix_seed(seed, kOrdDomination * 10007 + c));
    const std::size_t nx = 1 + rng.uniform_index(4);
    const std::size_t ny = 1 + rng.uniform_index(4);
    const Channel a = gen_random_channel(nx, ny, rng.next_u64());
    const Channel b = gen_random_channel(nx, ny, rng.next_u64());
    check.expect(similarity_distance(a, b) <= channel_distance(a, b) + 1e-9, c,
                 "similarity distance exceeds the channel distance");
  }
  return check.result();
}

CheckResult ordering_rank_bounds(std::uint64_t seed) {
  Check check("ordering/rank-bounds");
  for (std::size_t c = 0; c < 1000; ++c) {
    Rng rng(mix_seed(seed, kOrdRank * 10007 + c));
    const Channel w1 = gen_random_channel(1 + rng.uniform_index(6), 1, rng.next_u64());
    check.expect(input_rank(w1) == 1, c, "|Y|=1 channel with rank above 1");
    const Channel w2 = gen_random_channel(1 + rng.uniform_index(6), 2, rng.next_u64());
    check.expect(input_rank(w2) <= 2, c, "|Y|=2 channel with rank above 2");
  }
  return check.result();
}

CheckResult ordering_lipschitz(std::uint64_t seed) {
  Check check("ordering/sum-product-lipschitz");
  for (std::size_t c = 0; c < 300; ++c) {
    Rng rng(mix_seed(seed, kOrdLipschitz * 10007 + c));
    const std::size_t y1 = 1 + rng.uniform_index(3), y2 = 1 + rng.uniform_index(3);
    const Channel w1 = gen_random_channel(1 + rng.uniform_index(3), y1, rng.next_u64());
    const Channel w1p = gen_random_channel(1 + rng.uniform_index(3), y1, rng.next_u64());
    const Channel w2 = gen_random_channel(1 + rng.uniform_index(3), y2, rng.next_u64());
    const Channel w2p = gen_random_channel(1 + rng.uniform_index(3), y2, rng.next_u64());
    const double d1 = similarity_distance(w1, w1p);
    const double d2 = similarity_distance(w2, w2p);
    const double ds = similarity_distance(channel_sum(w1, w2), channel_sum(w1p, w2p));
    const double dp = similarity_distance(channel_product(w1, w2), channel_product(w1p, w2p));
    check.expect(ds <= d1 + d2 + 1e-7, c, "sum is not 1-Lipschitz in each argument");
    check.expect(dp <= d1 + d2 + 1e-7, c, "product is not 1-Lipschitz in each argument");
  }
  return check.result();
}

CheckResult ordering_preservation(std::uint64_t seed) {
  Check check("ordering/sum-product-preservation");
  for (std::size_t c = 0; c < 100; ++c) {
    Rng rng(mix_seed(seed, kOrdPreserve * 10007 + c));
    const DegradedPair p1 = make_degraded_pair(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                               1 + rng.uniform_index(3), rng.next_u64());
    const DegradedPair p2 = make_degraded_pair(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                               1 + rng.uniform_index(3), rng.next_u64());
    check.expect(is_input_degraded(channel_sum(p1.w, p2.w), channel_sum(p1.w_prime, p2.w_prime))
                     .degraded,
                 c, "degradedness not preserved by the channel sum");
    check.expect(
        is_input_degraded(channel_product(p1.w, p2.w), channel_product(p1.w_prime, p2.w_prime))
            .degraded,
        c, "degradedness not preserved by the channel product");
  }
  return check.result();
}

CheckResult ordering_sum_hull(std::uint64_t seed) {
  Check check("ordering/sum-hull-identity");
  for (std::size_t c = 0; c < 500; ++c) {
    Rng rng(mix_seed(seed, kOrdSumHull * 10007 + c));
    const Channel w1 = gen_random_channel(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                          rng.next_u64());
    const Channel w2 = gen_random_channel(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                          rng.next_u64());
    const Channel s = channel_sum(w1, w2);
    const Characteristic c1 = characteristic(w1);
    const Characteristic c2 = characteristic(w2);

    std::vector<double> q(s.output_size(), 0.0);
    if (rng.uniform() < 0.5) {
      // Mixture of the sum's rows: inside by construction.
      const std::vector<double> w = rng.simplex_point(s.input_size());
      for (std::size_t x = 0; x < s.input_size(); ++x) {
        for (std::size_t y = 0; y < s.output_size(); ++y) q[y] += w[x] * s.row(x)[y];
      }
    } else {
      q = rng.simplex_point(s.output_size());
    }
    const Distribution qd(q);

    const SumDecomposition dec = decompose_sum_point(qd, s.output_labels(), c1, c2);
    const MembershipResult direct = hull_membership(qd, s.rows());
    check.expect(dec.in_hull == direct.inside, c, "decomposition verdict disagrees with the LP");
    if (dec.in_hull) {
      // Reassemble (1-lambda) emb1(p1) + lambda emb2(p2).
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
      check.expect(l1_distance(rec, qd.probs()) <= 1e-7, c, "decomposition fails to reconstruct");
    }
  }
  return check.result();
}

CheckResult ordering_product_hull(std::uint64_t seed) {
  Check check("ordering/product-hull-identity");
  for (std::size_t c = 0; c < 500; ++c) {
    Rng rng(mix_seed(seed, kOrdProdHull * 10007 + c));
    const Channel w1 = gen_random_channel(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                          rng.next_u64());
    const Channel w2 = gen_random_channel(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                          rng.next_u64());
    const Channel p = channel_product(w1, w2);
    const Characteristic c1 = characteristic(w1);
    const Characteristic c2 = characteristic(w2);

    std::vector<double> q(p.output_size(), 0.0);
    if (rng.uniform() < 0.5) {
      const std::vector<double> w = rng.simplex_point(p.input_size());
      for (std::size_t x = 0; x < p.input_size(); ++x) {
        for (std::size_t y = 0; y < p.output_size(); ++y) q[y] += w[x] * p.row(x)[y];
      }
    } else {
      q = rng.simplex_point(p.output_size());
    }
    const Distribution qd(q);

    const MembershipResult via_ce = product_hull_membership(qd, p.output_labels(), c1, c2);
    const MembershipResult direct = hull_membership(qd, p.rows());
    check.expect(via_ce.inside == direct.inside, c,
                 "characteristic-product verdict disagrees with the row-hull LP");
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
      check.expect(l1_distance(rec, qd.probs()) <= 1e-7, c, "product weights fail to reconstruct");
    }
  }
  return check.result();
}

// ---------------------------------------------------------------------------
// coding
// ---------------------------------------------------------------------------

CheckResult coding_decoder_monotonicity(std::uint64_t seed) {
  Check check("coding/decoder-monotonicity");
  for (std::size_t c = 0; c < 100; ++c) {
    Rng rng(mix_seed(seed, kCodDecoderMono * 10007 + c));
    const std::size_t y = 1 + rng.uniform_index(3);
    const DegradedPair pair = make_degraded_pair(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                                 y, rng.next_u64());
    for (std::size_t t = 0; t < 20; ++t) {
      const std::size_t n = 1 + rng.uniform_index(2);
      const std::size_t m = 1 + rng.uniform_index(3);
      const Decoder d = gen_random_decoder(y, n, m, rng.next_u64());
      check.expect(pe_decoder_ml(pair.w_prime, d) <= pe_decoder_ml(pair.w, d) + 1e-9, c,
                   "decoder error got worse on the stronger channel");
    }
    // Input-equivalent pairs decode identically.
    const std::size_t bigger = pair.w.input_size() + rng.uniform_index(2);
    const Channel equiv = compose(
        pair.w, deterministic(gen_random_surjection(bigger, pair.w.input_size(), rng),
                              pair.w.input_size()));
    const Decoder d = gen_random_decoder(y, 1 + rng.uniform_index(2), 1 + rng.uniform_index(3),
                                         rng.next_u64());
    check.expect(std::abs(pe_decoder_ml(pair.w, d) - pe_decoder_ml(equiv, d)) <= 1e-9, c,
                 "equivalent channels decode differently");
  }
  return check.result();
}

CheckResult coding_guessing_monotonicity(std::uint64_t seed) {
  Check check("coding/guessing-monotonicity");
  for (std::size_t c = 0; c < 100; ++c) {
    Rng rng(mix_seed(seed, kCodGuessMono * 10007 + c));
    const std::size_t y = 1 + rng.uniform_index(3);
    const DegradedPair pair = make_degraded_pair(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                                 y, rng.next_u64());
    for (std::size_t t = 0; t < 1000; ++t) {
      const std::size_t u = 1 + rng.uniform_index(3);
      const Distribution prior(rng.simplex_point(u));
      const Channel dec = gen_random_channel(y, u, rng.next_u64());
      check.expect(pc(prior, pair.w, dec).value <= pc(prior, pair.w_prime, dec).value + 1e-9, c,
                   "P_c decreased on the stronger channel");
    }
  }
  return check.result();
}

CheckResult coding_shannon_invariance(std::uint64_t seed) {
  Check check("coding/equivalence-invariance");
  for (std::size_t c = 0; c < 50; ++c) {
    Rng rng(mix_seed(seed, kCodShannon * 10007 + c));
    const std::size_t nx = 1 + rng.uniform_index(3);
    const std::size_t ny = 1 + rng.uniform_index(3);
    const Channel w = gen_random_channel(nx, ny, rng.next_u64());
    const std::size_t bigger = nx + rng.uniform_index(2);
    const Channel equiv = compose(w, deterministic(gen_random_surjection(bigger, nx, rng), nx));

    check.expect(std::abs(capacity(w) - capacity(equiv)) <= 1e-6, c,
                 "capacity differs across an equivalent pair");
    const std::size_t nm_pairs[][2] = {{1, 2}, {2, 2}, {2, 3}};
    for (const auto& nm : nm_pairs) {
      check.expect(std::abs(pe_opt(w, nm[0], nm[1]) - pe_opt(equiv, nm[0], nm[1])) <= 1e-9, c,
                   "optimal error probability differs across an equivalent pair");
    }
  }
  return check.result();
}

CheckResult coding_pc_grid(std::uint64_t seed) {
  Check check("coding/pc-deterministic-optimum");
  for (std::size_t c = 0; c < 50; ++c) {
    Rng rng(mix_seed(seed, kCodPcGrid * 10007 + c));
    const std::size_t u = 1 + rng.uniform_index(3);
    const std::size_t x = 1 + rng.uniform_index(3);
    const std::size_t y = 1 + rng.uniform_index(3);
    const Distribution prior(rng.simplex_point(u));
    const Channel w = gen_random_channel(x, y, rng.next_u64());
    const Channel dec = gen_random_channel(y, u, rng.next_u64());
    const double det = pc(prior, w, dec).value;
    const double grid = oracle::grid_sup_pc(prior, w, dec, 0.05);
    check.expect(std::abs(det - grid) <= 1e-9, c,
                 "random-encoder grid beats the deterministic optimum");
  }
  return check.result();
}

CheckResult coding_pe_opt_monotone(std::uint64_t seed) {
  Check check("coding/pe-opt-monotonicity");
  for (std::size_t c = 0; c < 50; ++c) {
    Rng rng(mix_seed(seed, kCodPeOptMono * 10007 + c));
    const DegradedPair pair = make_degraded_pair(1 + rng.uniform_index(3), 1 + rng.uniform_index(3),
                                                 1 + rng.uniform_index(3), rng.next_u64());
    const std::size_t nm_pairs[][2] = {{1, 2}, {2, 2}};
    for (const auto& nm : nm_pairs) {
      check.expect(pe_opt(pair.w_prime, nm[0], nm[1]) <= pe_opt(pair.w, nm[0], nm[1]) + 1e-9, c,
                   "optimal error got worse on the stronger channel");
    }
  }
  return check.result();
}

// ---------------------------------------------------------------------------
// games
// ---------------------------------------------------------------------------

RandomizedGame gen_game(Rng& rng, const Channel& w, std::size_t z_max = 3) {
  const std::size_t z = 1 + rng.uniform_index(z_max);
  std::vector<std::vector<double>> payoff(z, std::vector<double>(w.output_size()));
  for (auto& row : payoff) {
    for (double& v : row) v = rng.uniform(-1.0, 1.0);
  }
  return RandomizedGame(z, std::move(payoff), w);
}

CheckResult games_affinity(std::uint64_t seed) {
  Check check("games/payoff-affinity");
  for (std::size_t c = 0; c < 300; ++c) {
    Rng rng(mix_seed(seed, kGamAffine * 10007 + c));
    const Channel w = gen_random_channel(1 + rng.uniform_index(4), 1 + rng.uniform_index(4),
                                         rng.next_u64());
    const RandomizedGame g = gen_game(rng, w);
    const Channel s1 = gen_random_channel(g.z_size, w.input_size(), rng.next_u64());
    const Channel s2 = gen_random_channel(g.z_size, w.input_size(), rng.next_u64());
    const double alpha = rng.uniform();
    std::vector<std::vector<double>> mixed(g.z_size, std::vector<double>(w.input_size()));
    for (std::size_t z = 0; z < g.z_size; ++z) {
      for (std::size_t x = 0; x < w.input_size(); ++x) {
        mixed[z][x] = alpha * s1.row(z)[x] + (1.0 - alpha) * s2.row(z)[x];
      }
    }
    const std::vector<double> vm = payoff_vector(Channel::validate(mixed), g);
    const std::vector<double> v1 = payoff_vector(s1, g);
    const std::vector<double> v2 = payoff_vector(s2, g);
    bool ok = true;
    for (std::size_t z = 0; z < g.z_size; ++z) {
      ok = ok && std::abs(vm[z] - (alpha * v1[z] + (1.0 - alpha) * v2[z])) <= 1e-12;
    }
    check.expect(ok, c, "payoff vector is not affine in the strategy");
  }
  return check.result();
}

CheckResult games_opt_vs_vertices(std::uint64_t seed) {
  Check check("games/optimum-at-vertices");
  for (std::size_t c = 0; c < 300; ++c) {
    Rng rng(mix_seed(seed, kGamOptVert * 10007 + c));
    const Channel w = gen_random_channel(1 + rng.uniform_index(4), 1 + rng.uniform_index(4),
                                         rng.next_u64());
    const RandomizedGame g = gen_game(rng, w);
    const double opt = optimal_average_payoff(g).value;
    double best = -1e300;
    for (const auto& v : achievable_region_vertices(g)) {
      double mean = 0.0;
      for (double e : v) mean += e;
      best = std::max(best, mean / static_cast<double>(g.z_size));
    }
    check.expect(std::abs(opt - best) <= 1e-12, c,
                 "closed-form optimum differs from the best region vertex");

    // Affinity cross-check: a mixed strategy's payoff lies in the region.
    const Channel s = gen_random_channel(g.z_size, w.input_size(), rng.next_u64());
    check.expect(region_contains(g, payoff_vector(s, g)).inside, c,
                 "mixed-strategy payoff escapes the region");
  }
  return check.result();
}

CheckResult games_bss_forward(std::uint64_t seed) {
  Check check("games/bss-forward");
  for (std::size_t c = 0; c < 20; ++c) {
    Rng rng(mix_seed(seed, kGamForward * 10007 + c));
    const DegradedPair pair = make_degraded_pair(1 + rng.uniform_index(4), 1 + rng.uniform_index(4),
                                                 1 + rng.uniform_index(3), rng.next_u64());
    const BssReport report = check_bss(pair.w, pair.w_prime, 10, rng.next_u64());
    check.expect(report.degraded && report.passed, c,
                 "region inclusion or payoff inequality failed on a degraded pair");
  }
  return check.result();
}

CheckResult games_negative_witness(std::uint64_t seed) {
  Check check("games/bss-witness");
  for (std::size_t c = 0; c < 20; ++c) {
    Rng rng(mix_seed(seed, kGamWitness * 10007 + c));
    const RefutedPair pair = make_refuted_pair(1 + rng.uniform_index(4), 1 + rng.uniform_index(4),
                                               2 + rng.uniform_index(3), rng.next_u64());
    const BssReport report = check_bss(pair.w, pair.w_prime, 10, rng.next_u64());
    if (report.degraded || !report.witness) {
      check.expect(false, c, "refuted pair produced no witness game");
      continue;
    }
    const BssWitness& wit = *report.witness;
    check.expect(report.passed, c, "witness game does not violate condition (c)");
    check.expect(std::abs((wit.opt_payoff_lhs - wit.opt_payoff_rhs) - wit.gap) <= 1e-7, c,
                 "witness payoff gap does not match the refutation gap");
  }
  return check.result();
}

using CheckFn = CheckResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, std::vector<CheckFn>>>& registry() {
  static const std::vector<std::pair<std::string, std::vector<CheckFn>>> reg = {
      {"geometry",
       {geometry_certificate_soundness, geometry_oracle_agreement, geometry_extreme_idempotence,
        geometry_hausdorff_metric, geometry_hull_reduction}},
      {"channel",
       {channel_compose_assoc, channel_metric, channel_sum_product_stochastic, channel_sum_compat}},
      {"ordering",
       {ordering_soundness, ordering_refutation, ordering_transitivity, ordering_canonical_roundtrip,
        ordering_metric_axioms, ordering_domination, ordering_rank_bounds, ordering_lipschitz,
        ordering_preservation, ordering_sum_hull, ordering_product_hull}},
      {"coding",
       {coding_decoder_monotonicity, coding_guessing_monotonicity, coding_shannon_invariance, coding_pc_grid,
        coding_pe_opt_monotone}},
      {"games",
       {games_affinity, games_opt_vs_vertices, games_bss_forward, games_negative_witness}},
  };
  return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, checks] : registry()) names.push_back(name);
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [suite, checks] : registry()) {
    if (name != "all" && name != suite) continue;
    found = true;
    for (CheckFn fn : checks) out.push_back(fn(seed));
  }
  if (!found) throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  return out;
}

Channel gen_interior_channel(std::size_t inputs, std::size_t outputs, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<double>> rows(inputs);
  for (auto& row : rows) {
    row = rng.simplex_point(outputs);
    for (double& e : row) e = 0.5 * e + 0.5 / static_cast<double>(outputs);
  }
  return Channel::validate(rows);
}

DegradedPair make_degraded_pair(std::size_t x_size, std::size_t x_prime_size, std::size_t y_size,
                                std::uint64_t seed) {
  Rng rng(seed);
  Channel w_prime = gen_random_channel(x_prime_size, y_size, rng.next_u64());
  Channel v_prime = gen_random_channel(x_size, x_prime_size, rng.next_u64());
  Channel w = compose(w_prime, v_prime);
  return DegradedPair{std::move(w), std::move(w_prime), std::move(v_prime)};
}

RefutedPair make_refuted_pair(std::size_t x_size, std::size_t x_prime_size, std::size_t y_size,
                              std::uint64_t seed) {
  if (y_size < 2) {
    throw std::invalid_argument("make_refuted_pair: |Y| must be at least 2");
  }
  Rng rng(seed);
  const Channel w_prime = gen_interior_channel(x_prime_size, y_size, rng.next_u64());

  // Rows of W mix the rows of W', except one planted row squeezed against a
  // simplex vertex. Interior rows of W' keep every hull coordinate at least
  // 1/(2|Y|), while the planted row drops one coordinate to eps/|Y|.
  const std::size_t planted = rng.uniform_index(x_size);
  const std::size_t vertex = rng.uniform_index(y_size);
  const double eps = 0.05;
  std::vector<std::vector<double>> rows(x_size);
  for (std::size_t x = 0; x < x_size; ++x) {
    if (x == planted) {
      std::vector<double> row(y_size, eps / static_cast<double>(y_size));
      row[vertex] += 1.0 - eps;
      rows[x] = std::move(row);
    } else {
      const std::vector<double> mix = rng.simplex_point(x_prime_size);
      std::vector<double> row(y_size, 0.0);
      for (std::size_t j = 0; j < x_prime_size; ++j) {
        for (std::size_t y = 0; y < y_size; ++y) row[y] += mix[j] * w_prime.row(j)[y];
      }
      rows[x] = std::move(row);
    }
  }
  Channel w = Channel::validate(rows);
  if (is_input_degraded(w, w_prime).degraded) {
    throw std::logic_error("make_refuted_pair: planted row unexpectedly inside the hull");
  }
  return RefutedPair{std::move(w), w_prime, planted};
}

}  // namespace chanorder
