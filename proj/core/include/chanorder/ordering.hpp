#ifndef CHANORDER_ORDERING_HPP
#define CHANORDER_ORDERING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "chanorder/channel.hpp"
#include "chanorder/geometry.hpp"
#include "chanorder/tolerances.hpp"

namespace chanorder {

/// The complete invariant of an input-equivalence class: the convex-extreme
/// points of the channel's row set, in lexicographic order.
struct Characteristic {
  std::vector<Symbol> output_labels;
  std::vector<Distribution> points;
};

/// Witness that some row of W lies outside conv(rows of W'). The payoff is
/// a linear functional over Y scaled to max-abs 1; `gap` is the margin
///   <payoff, W_row> - max_x' <payoff, W'_x'>  >  0.
struct Refutation {
  std::size_t row_index = 0;
  std::vector<double> payoff;
  double gap = 0.0;
};

struct DegradednessResult {
  bool degraded = false;
  /// Intertwiner V' with W = W' o V' (present iff degraded).
  std::optional<Channel> intertwiner;
  /// First failing row's separator (present iff not degraded).
  std::optional<Refutation> refutation;
};

/// Decides whether `w` is input-degraded from `w_prime` by testing each row
/// of `w` for membership in the hull of the rows of `w_prime`. The
/// membership weights of row x become row x of the intertwiner.
DegradednessResult is_input_degraded(const Channel& w, const Channel& w_prime,
                                     const ToleranceConfig& tol = {});

Characteristic characteristic(const Channel& w, const ToleranceConfig& tol = {});

/// Number of characteristic points.
std::size_t input_rank(const Channel& w, const ToleranceConfig& tol = {});

/// True iff the characteristics match as sets within dedup_tol.
bool is_input_equivalent(const Channel& w, const Channel& w_prime,
                         const ToleranceConfig& tol = {});

/// The minimal member of the input-equivalence class: rows are exactly the
/// characteristic points in canonical order.
Channel canonical_representative(const Channel& w, const ToleranceConfig& tol = {});

/// Similarity distance between the input-equivalence classes of two
/// channels with a common output alphabet: the Hausdorff distance (in total
/// variation) between the convex hulls of their rows. Input sizes may
/// differ.
double similarity_distance(const Channel& w, const Channel& w_prime,
                           const ToleranceConfig& tol = {});

/// Constructive witness for a non-degraded pair: a single-context payoff
/// functional whose optimal value under `w` beats the optimal value under
/// `w_prime` by `gap`. The returned row index attains the optimum for `w`.
/// Throws if the pair is in fact degraded.
Refutation find_separating_payoff(const Channel& w, const Channel& w_prime,
                                  const ToleranceConfig& tol = {});

/// Decomposition of a point on a sum alphabet Y1 + Y2 against the hull
/// union formula for channel sums: q = (1-lambda) emb1(p1) + lambda emb2(p2)
/// with pi in conv(Ci). lambda is forced to the right-block mass of q. The
/// weights of an empty side (lambda exactly 0 or 1) are omitted.
struct SumDecomposition {
  bool in_hull = false;
  double lambda = 0.0;
  std::optional<std::vector<double>> left_weights;
  std::optional<std::vector<double>> right_weights;
};

SumDecomposition decompose_sum_point(const Distribution& q,
                                     const std::vector<Symbol>& sum_alphabet,
                                     const Characteristic& left,
                                     const Characteristic& right,
                                     const ToleranceConfig& tol = {});

/// Membership of a point on a product alphabet Y1 x Y2 in
/// conv(conv(C1) x conv(C2)), realized as the hull of the pairwise products
/// of characteristic points.
MembershipResult product_hull_membership(const Distribution& q,
                                         const std::vector<Symbol>& product_alphabet,
                                         const Characteristic& left,
                                         const Characteristic& right,
                                         const ToleranceConfig& tol = {});

}  // namespace chanorder

#endif  // CHANORDER_ORDERING_HPP
