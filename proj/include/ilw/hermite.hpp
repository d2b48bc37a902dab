#pragma once

#include <utility>

#include "ilw/depth.hpp"

namespace ilw {

/// Practical degree cap for hermite(); the measures here need k <= 6.
inline constexpr int kHermiteDegreeCap = 64;

/// Hermite polynomial H_k(x; sigma) with variance parameter, defined by the
/// generating function e^{tx - sigma t^2/2} = sum_k t^k/k! H_k(x; sigma).
/// Evaluated by the recursion H_k = x H_{k-1} - (k-1) sigma H_{k-2}.
double hermite(int k, double x, double sigma);

/// Both sides of the shift identity
///   H_k(x+y; sigma) = sum_l C(k,l) x^{k-l} H_l(y; sigma),
/// returned as (lhs, rhs) for property tests.
std::pair<double, double> hermite_shift_check(int k, double x, double y, double sigma);

/// -min_x H_k(x; 1), located numerically on a dense grid; finite for even k.
/// By the scaling identity, H_k(x; sigma) >= -sigma^{k/2} * hermite_floor(k).
double hermite_floor(int k);

/// A Wick variance constant together with which family/truncation it
/// renormalizes.
struct WickVariance {
    enum class Provenance { Deep, Shallow, KdVTruncated, KdVLimit };

    double sigma = 0.0;
    Provenance provenance = Provenance::Deep;
    DepthParam depth = DepthParam::infinite();
    int cutoff = 0; // 0 for the N-independent KdV limit
};

/// sigma_{delta,N} = (1/pi) sum_{n=1}^N 1/K_delta(n); the per-point variance
/// of the truncated deep-family field. Infinite depth gives the gBO constant
/// (1/pi) sum 1/n.
WickVariance sigma_deep(const DepthParam& depth, int cutoff);

/// sigma~_{delta,N} = (delta/3) sigma_{delta,N}, exact by construction.
WickVariance sigma_shallow(const DepthParam& depth, int cutoff);

/// sigma_{KdV,N} = (1/pi) sum_{n=1}^N 1/n^2.
WickVariance sigma_kdv(int cutoff);

/// sigma_KdV = pi/6, the N -> infinity limit of sigma_kdv.
WickVariance sigma_kdv_limit();

} // namespace ilw
