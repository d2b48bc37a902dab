#include "ilw/hermite.hpp"

#include <cmath>
#include <vector>

#include "ilw/dispersion.hpp"
#include "ilw/errors.hpp"

namespace ilw {

double hermite(int k, double x, double sigma) {
    if (k < 0) throw degree_error("hermite: negative degree");
    if (k > kHermiteDegreeCap) throw degree_error("hermite: degree beyond cap 64");
    if (sigma < 0.0) throw std::domain_error("hermite: sigma must be nonnegative");
    if (k == 0) return 1.0;
    double hm2 = 1.0; // H_0
    double hm1 = x;   // H_1
    for (int j = 2; j <= k; ++j) {
        const double h = x * hm1 - static_cast<double>(j - 1) * sigma * hm2;
        hm2 = hm1;
        hm1 = h;
    }
    return hm1;
}

std::pair<double, double> hermite_shift_check(int k, double x, double y, double sigma) {
    const double lhs = hermite(k, x + y, sigma);
    double rhs = 0.0;
    double binom = 1.0; // C(k, l)
    double xpow = std::pow(x, k);
    for (int l = 0; l <= k; ++l) {
        rhs += binom * xpow * hermite(l, y, sigma);
        binom *= static_cast<double>(k - l) / static_cast<double>(l + 1);
        xpow = (x == 0.0) ? (l + 1 == k ? 1.0 : 0.0) : xpow / x;
    }
    return {lhs, rhs};
}

double hermite_floor(int k) {
    // H_k(x;1) ~ x^k dominates for |x| > ~2 sqrt(k); a uniform grid on
    // [-8, 8] brackets the global minimum for the degrees in use.
    double lo = 0.0;
    const int pts = 200001;
    for (int i = 0; i < pts; ++i) {
        const double x = -8.0 + 16.0 * static_cast<double>(i) / (pts - 1);
        lo = std::min(lo, hermite(k, x, 1.0));
    }
    return -lo;
}

namespace {
double inverse_symbol_sum(const DepthParam& depth, int cutoff) {
    if (cutoff < 1) throw std::domain_error("wick variance: cutoff >= 1 required");
    long double s = 0.0L;
    for (int n = cutoff; n >= 1; --n) s += 1.0L / static_cast<long double>(k_delta(depth, n));
    return static_cast<double>(s);
}
} // namespace

WickVariance sigma_deep(const DepthParam& depth, int cutoff) {
    if (depth.is_shallow()) throw family_error("sigma_deep: shallow depth is not in the deep family");
    const double pi = 3.14159265358979323846;
    return {inverse_symbol_sum(depth, cutoff) / pi, WickVariance::Provenance::Deep, depth, cutoff};
}

WickVariance sigma_shallow(const DepthParam& depth, int cutoff) {
    if (!depth.is_finite()) throw family_error("sigma_shallow requires a finite depth");
    WickVariance w = sigma_deep(depth, cutoff);
    return {depth.delta() / 3.0 * w.sigma, WickVariance::Provenance::Shallow, depth, cutoff};
}

WickVariance sigma_kdv(int cutoff) {
    if (cutoff < 1) throw std::domain_error("sigma_kdv: cutoff >= 1 required");
    const double pi = 3.14159265358979323846;
    long double s = 0.0L;
    for (int n = cutoff; n >= 1; --n) {
        const long double dn = static_cast<long double>(n);
        s += 1.0L / (dn * dn);
    }
    return {static_cast<double>(s) / pi, WickVariance::Provenance::KdVTruncated,
            DepthParam::shallow(), cutoff};
}

WickVariance sigma_kdv_limit() {
    const double pi = 3.14159265358979323846;
    return {pi / 6.0, WickVariance::Provenance::KdVLimit, DepthParam::shallow(), 0};
}

} // namespace ilw
