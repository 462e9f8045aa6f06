#include "chanorder/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace chanorder {

namespace {

void require_same_output(const Channel& w, const Channel& w_prime, const char* who) {
  if (w.output_labels() != w_prime.output_labels()) {
    throw std::invalid_argument(std::string(who) + ": output alphabet mismatch");
  }
}

std::vector<std::vector<double>> row_matrix(const Channel& w) {
  std::vector<std::vector<double>> out;
  out.reserve(w.input_size());
  for (const Distribution& r : w.rows()) out.push_back(r.probs());
  return out;
}

}  // namespace

DegradednessResult is_input_degraded(const Channel& w, const Channel& w_prime,
                                     const ToleranceConfig& tol) {
  require_same_output(w, w_prime, "is_input_degraded");
  const std::vector<std::vector<double>> gens = row_matrix(w_prime);

  std::vector<Distribution> intertwiner_rows;
  intertwiner_rows.reserve(w.input_size());
  for (std::size_t x = 0; x < w.input_size(); ++x) {
    MembershipResult mem = hull_membership(w.row(x).probs(), gens, tol);
    if (!mem.inside) {
      DegradednessResult res;
      res.degraded = false;
      Refutation ref;
      ref.row_index = x;
      ref.payoff = mem.separator->functional;
      ref.gap = mem.separator->gap;
      res.refutation = std::move(ref);
      return res;
    }
    intertwiner_rows.emplace_back(std::move(mem.weights));
  }

  DegradednessResult res;
  res.degraded = true;
  res.intertwiner = Channel(default_labels(w_prime.input_size()), std::move(intertwiner_rows));
  return res;
}

Characteristic characteristic(const Channel& w, const ToleranceConfig& tol) {
  const std::vector<std::size_t> keep = convex_extreme_points(w.rows(), tol);
  std::vector<Distribution> pts;
  pts.reserve(keep.size());
  for (std::size_t i : keep) pts.push_back(w.row(i));
  std::sort(pts.begin(), pts.end(),
            [](const Distribution& a, const Distribution& b) { return lex_less(a.probs(), b.probs()); });
  return Characteristic{w.output_labels(), std::move(pts)};
}

std::size_t input_rank(const Channel& w, const ToleranceConfig& tol) {
  return characteristic(w, tol).points.size();
}

bool is_input_equivalent(const Channel& w, const Channel& w_prime, const ToleranceConfig& tol) {
  require_same_output(w, w_prime, "is_input_equivalent");
  const Characteristic a = characteristic(w, tol);
  const Characteristic b = characteristic(w_prime, tol);
  // Set match within dedup_tol, both directions.
  for (const Distribution& p : a.points) {
    bool found = false;
    for (const Distribution& q : b.points) {
      if (l1_distance(p, q) <= tol.dedup_tol) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  for (const Distribution& q : b.points) {
    bool found = false;
    for (const Distribution& p : a.points) {
      if (l1_distance(p, q) <= tol.dedup_tol) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Channel canonical_representative(const Channel& w, const ToleranceConfig& tol) {
  Characteristic ce = characteristic(w, tol);
  return Channel(std::move(ce.output_labels), std::move(ce.points));
}

double similarity_distance(const Channel& w, const Channel& w_prime, const ToleranceConfig& tol) {
  require_same_output(w, w_prime, "similarity_distance");
  const Characteristic a = characteristic(w, tol);
  const Characteristic b = characteristic(w_prime, tol);
  return hausdorff_tv(a.points, b.points, tol);
}

Refutation find_separating_payoff(const Channel& w, const Channel& w_prime,
                                  const ToleranceConfig& tol) {
  DegradednessResult res = is_input_degraded(w, w_prime, tol);
  if (res.degraded) {
    throw std::invalid_argument("find_separating_payoff: the pair is input-degraded");
  }
  // The hull separator already witnesses the payoff inequality for one row;
  // report the margin of the single-context game, i.e. against the best row
  // of w rather than just the refuted one.
  Refutation ref = *res.refutation;
  const auto value = [&ref](const Distribution& row) {
    double v = 0.0;
    for (std::size_t y = 0; y < row.size(); ++y) v += ref.payoff[y] * row[y];
    return v;
  };
  double best_w = -std::numeric_limits<double>::infinity();
  std::size_t best_row = 0;
  for (std::size_t x = 0; x < w.input_size(); ++x) {
    const double v = value(w.row(x));
    if (v > best_w) {
      best_w = v;
      best_row = x;
    }
  }
  double best_wp = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < w_prime.input_size(); ++x) {
    best_wp = std::max(best_wp, value(w_prime.row(x)));
  }
  ref.row_index = best_row;
  ref.gap = best_w - best_wp;
  return ref;
}

SumDecomposition decompose_sum_point(const Distribution& q,
                                     const std::vector<Symbol>& sum_alphabet,
                                     const Characteristic& left,
                                     const Characteristic& right,
                                     const ToleranceConfig& tol) {
  const std::size_t m1 = left.output_labels.size();
  const std::size_t m2 = right.output_labels.size();
  if (sum_alphabet.size() != m1 + m2 || q.size() != m1 + m2) {
    throw std::invalid_argument("decompose_sum_point: malformed tagged alphabet");
  }
  for (std::size_t y = 0; y < m1; ++y) {
    if (sum_alphabet[y].kind() != Symbol::Kind::kLeft ||
        sum_alphabet[y].inner() != left.output_labels[y]) {
      throw std::invalid_argument("decompose_sum_point: malformed tagged alphabet");
    }
  }
  for (std::size_t y = 0; y < m2; ++y) {
    if (sum_alphabet[m1 + y].kind() != Symbol::Kind::kRight ||
        sum_alphabet[m1 + y].inner() != right.output_labels[y]) {
      throw std::invalid_argument("decompose_sum_point: malformed tagged alphabet");
    }
  }

  double lambda = 0.0;
  for (std::size_t y = 0; y < m2; ++y) lambda += q[m1 + y];
  lambda = std::clamp(lambda, 0.0, 1.0);

  // The disjoint supports force lambda; a side with zero mass contributes
  // nothing and carries no weights.
  constexpr double kMassFloor = 1e-12;
  SumDecomposition out;
  out.lambda = lambda;
  out.in_hull = true;
  if (lambda < 1.0 - kMassFloor) {
    std::vector<double> block(m1);
    for (std::size_t y = 0; y < m1; ++y) block[y] = q[y] / (1.0 - lambda);
    std::vector<std::vector<double>> gens;
    gens.reserve(left.points.size());
    for (const Distribution& p : left.points) gens.push_back(p.probs());
    MembershipResult mem = hull_membership(block, gens, tol);
    if (!mem.inside) {
      out.in_hull = false;
      return out;
    }
    out.left_weights = std::move(mem.weights);
  } else {
    out.lambda = 1.0;
  }
  if (lambda > kMassFloor) {
    std::vector<double> block(m2);
    for (std::size_t y = 0; y < m2; ++y) block[y] = q[m1 + y] / lambda;
    std::vector<std::vector<double>> gens;
    gens.reserve(right.points.size());
    for (const Distribution& p : right.points) gens.push_back(p.probs());
    MembershipResult mem = hull_membership(block, gens, tol);
    if (!mem.inside) {
      out.in_hull = false;
      out.left_weights.reset();
      return out;
    }
    out.right_weights = std::move(mem.weights);
  } else {
    out.lambda = 0.0;
  }
  return out;
}

MembershipResult product_hull_membership(const Distribution& q,
                                         const std::vector<Symbol>& product_alphabet,
                                         const Characteristic& left,
                                         const Characteristic& right,
                                         const ToleranceConfig& tol) {
  const std::size_t m1 = left.output_labels.size();
  const std::size_t m2 = right.output_labels.size();
  if (product_alphabet.size() != m1 * m2 || q.size() != m1 * m2) {
    throw std::invalid_argument("product_hull_membership: malformed product alphabet");
  }
  for (std::size_t y1 = 0; y1 < m1; ++y1) {
    for (std::size_t y2 = 0; y2 < m2; ++y2) {
      const Symbol& s = product_alphabet[y1 * m2 + y2];
      if (s.kind() != Symbol::Kind::kPair || s.first() != left.output_labels[y1] ||
          s.second() != right.output_labels[y2]) {
        throw std::invalid_argument("product_hull_membership: malformed product alphabet");
      }
    }
  }

  // conv(K1 (x) K2) is generated by the pairwise products of the extreme
  // points of K1 and K2.
  std::vector<std::vector<double>> gens;
  gens.reserve(left.points.size() * right.points.size());
  for (const Distribution& p1 : left.points) {
    for (const Distribution& p2 : right.points) {
      std::vector<double> g(m1 * m2);
      for (std::size_t y1 = 0; y1 < m1; ++y1) {
        for (std::size_t y2 = 0; y2 < m2; ++y2) g[y1 * m2 + y2] = p1[y1] * p2[y2];
      }
      gens.push_back(std::move(g));
    }
  }
  return hull_membership(q.probs(), gens, tol);
}

}  // namespace chanorder
