#include <cmath>

#include "doctest.h"
#include "ilw/hermite.hpp"
#include "ilw/rng.hpp"

using namespace ilw;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Taylor coefficient of t^k/k! in e^{tx - sigma t^2/2} via the Cauchy
// product of the two factor series; independent of the recursion.
double generating_series(int k, double x, double sigma) {
    double sum = 0.0;
    double mfact = 1.0, spow = 1.0;
    for (int m = 0; 2 * m <= k; ++m) {
        double xterm = 1.0;
        for (int j = 1; j <= k - 2 * m; ++j) xterm *= x / j;
        sum += spow / mfact * xterm;
        mfact *= (m + 1);
        spow *= -sigma / 2.0;
    }
    double kfact = 1.0;
    for (int j = 2; j <= k; ++j) kfact *= j;
    return sum * kfact;
}
} // namespace

TEST_CASE("hermite: explicit low degrees") {
    CHECK(hermite(0, 3.7, 2.0) == 1.0);
    CHECK(hermite(1, 3.7, 2.0) == 3.7);
    CHECK(hermite(2, 2.0, 1.0) == 3.0);
    for (double x : {-1.5, 0.0, 0.8})
        for (double s : {0.5, 1.0, 2.5}) {
            CHECK(hermite(2, x, s) == doctest::Approx(x * x - s).epsilon(1e-15));
            CHECK(hermite(3, x, s) == doctest::Approx(x * x * x - 3 * s * x).epsilon(1e-14));
            CHECK(hermite(4, x, s) ==
                  doctest::Approx(x * x * x * x - 6 * s * x * x + 3 * s * s).epsilon(1e-14));
        }
    CHECK(hermite(4, 0.0, 1.7) == doctest::Approx(3.0 * 1.7 * 1.7).epsilon(1e-15));
    CHECK_THROWS_AS(hermite(65, 0.0, 1.0), degree_error);
}

TEST_CASE("hermite: generating-function, scaling, derivative") {
    for (int k = 0; k <= 10; ++k)
        for (double s : {0.5, 1.0, 2.0})
            for (double x : {-2.0, 0.0, 1.0, 3.0}) {
                const double o = generating_series(k, x, s);
                CHECK(std::abs(hermite(k, x, s) - o) <= 1e-8 * std::max(1.0, std::abs(o)));
            }
    for (int k = 1; k <= 12; ++k)
        for (double s : {0.3, 1.0, 4.2})
            for (double x : {-2.2, 0.5, 1.9}) {
                const double lhs = hermite(k, x, s);
                const double rhs = std::pow(s, 0.5 * k) * hermite(k, x / std::sqrt(s), 1.0);
                CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
            }
    // (H_k(x+e) - H_k(x-e))/2e = k H_{k-1}(x) + O(e^2)
    const double e = 1e-5;
    for (int k = 1; k <= 6; ++k)
        for (double x : {-1.0, 0.3, 2.0}) {
            const double fd = (hermite(k, x + e, 1.3) - hermite(k, x - e, 1.3)) / (2 * e);
            CHECK(std::abs(fd - k * hermite(k - 1, x, 1.3)) < 1e-6 * std::max(1.0, std::abs(fd)));
        }
}

TEST_CASE("hermite: shift identity") {
    auto [lhs, rhs] = hermite_shift_check(3, 1.0, 1.0, 1.0);
    CHECK(lhs == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(rhs == doctest::Approx(2.0).epsilon(1e-12));
    for (int k = 0; k <= 6; ++k) {
        auto [l0, r0] = hermite_shift_check(k, 0.0, 1.3, 0.7);
        CHECK(l0 == doctest::Approx(hermite(k, 1.3, 0.7)).epsilon(1e-14));
        CHECK(r0 == doctest::Approx(l0).epsilon(1e-12));
    }
    GaussianStream gs(99);
    for (int t = 0; t < 200; ++t) {
        const int k = 1 + static_cast<int>(gs.uniform(4 * t) * 8);
        const double x = 4.0 * gs.uniform(4 * t + 1);
        const double y = 4.0 * gs.uniform(4 * t + 2);
        const double s = 4.0 * gs.uniform(4 * t + 3);
        auto [l, r] = hermite_shift_check(k, x, y, s);
        CHECK(std::abs(l - r) <= 1e-9 * (1.0 + std::abs(l)));
    }
}

TEST_CASE("hermite: defocusing floor") {
    // a_4 = 6 exactly (minimum of x^4 - 6x^2 + 3 at x^2 = 3)
    CHECK(hermite_floor(4) == doctest::Approx(6.0).epsilon(1e-6));
    for (int deg : {4, 6})
        for (double s : {0.5, 2.0}) {
            const double floor = -std::pow(s, deg / 2.0) * hermite_floor(deg);
            double lo = 0.0;
            for (int i = 0; i <= 40000; ++i) {
                const double x = -8.0 * std::sqrt(s) + 16.0 * std::sqrt(s) * i / 40000.0;
                lo = std::min(lo, hermite(deg, x, s));
            }
            CHECK(lo >= floor - 1e-9 * std::abs(floor));
        }
}

TEST_CASE("wick variances: deep and limits") {
    CHECK(sigma_deep(DepthParam::infinite(), 2).sigma ==
          doctest::Approx(1.5 / kPi).epsilon(1e-15));
    // log growth band of sigma_{inf,N}
    for (int N : {100, 1000, 10000, 100000}) {
        const double ratio = sigma_deep(DepthParam::infinite(), N).sigma / std::log(N + 1.0);
        CHECK(ratio > 0.25);
        CHECK(ratio < 0.45);
    }
    // monotone convergence to sigma_{inf,N} as delta grows, N fixed
    const double target = sigma_deep(DepthParam::infinite(), 8).sigma;
    double prev = 1e300;
    for (int j = 0; j <= 12; ++j) {
        const double s = sigma_deep(DepthParam::finite(std::ldexp(1.0, j)), 8).sigma;
        CHECK(s < prev);
        CHECK(s > target);
        prev = s;
    }
    CHECK(prev - target < 1e-3);
    CHECK_THROWS_AS(sigma_deep(DepthParam::shallow(), 4), family_error);
}

TEST_CASE("wick variances: kdv family") {
    CHECK(sigma_kdv_limit().sigma == doctest::Approx(kPi / 6.0).epsilon(1e-15));
    CHECK(sigma_kdv(1).sigma == doctest::Approx(1.0 / kPi).epsilon(1e-15));
    for (int N : {10, 100, 1000})
        CHECK(std::abs(sigma_kdv(N).sigma - kPi / 6.0) <= 1.0 / (kPi * N));
    for (double d : {0.5, 2.0})
        for (int N : {8, 64}) {
            const DepthParam depth = DepthParam::finite(d);
            CHECK(std::abs(sigma_shallow(depth, N).sigma -
                           d / 3.0 * sigma_deep(depth, N).sigma) <= 1e-14);
        }
}
