#pragma once

#include <cstdint>

#include "ilw/depth.hpp"

namespace ilw {

/// h(x) = 1 - x*coth(x) + |x| = 1 - 2x/(e^{2x} - 1) for x > 0, extended
/// evenly with h(0) = 0. Takes values in (0, min(1, |x|)) for x != 0.
///
/// Evaluated by a small-|x| series (cancellation-free), an expm1 midrange
/// branch, and a saturated large-|x| branch (overflow-free, h -> 1).
double h_frak(double x);

/// Deep-family dispersion symbol K_delta(n) = n*coth(delta*n) - 1/delta,
/// with K_delta(0) = 0 and K_inf(n) = |n|. Computed in the stable form
/// |n| - h(delta*|n|)/delta. Rejects Shallow depth.
double k_delta(const DepthParam& depth, std::int64_t n);

/// Scaled symbol L_delta(n) = 3*K_delta(n)/delta, with the shallow limit
/// L_0(n) = n^2. Rejects Infinite depth.
double l_delta(const DepthParam& depth, std::int64_t n);

/// Symbol defect q_delta(n) = |n| - K_delta(n) = h(delta*|n|)/delta,
/// even in n and bounded by 1/delta. Finite depth only.
double q_delta(const DepthParam& depth, std::int64_t n);

/// h(n, delta) = 1 - L_delta(n)/n^2, the per-mode Kakutani defect of the
/// scaled family against KdV; lies in (0, 1) for n != 0, delta > 0.
double h_shallow(const DepthParam& depth, std::int64_t n);

/// Partial sum of the Mittag-Leffler expansion
///   L_delta(n) = 6 n^2 sum_{k>=1} 1/(k^2 pi^2 + delta^2 n^2).
/// Monotone increasing in `terms`; the tail remainder is bounded by
/// mittag_leffler_tail_bound(n, terms). Kept as an oracle for l_delta.
double mittag_leffler_l(double delta, std::int64_t n, std::int64_t terms);

/// Analytic bound 6 n^2 / (pi^2 * terms) on the truncation remainder.
double mittag_leffler_tail_bound(std::int64_t n, std::int64_t terms);

} // namespace ilw
