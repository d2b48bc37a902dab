#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace ilw {

/// splitmix64 finalizer; the de-facto standard 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ mix64(b));
}

/// uniform in (0, 1], 53-bit
inline double uniform01(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

/// Counter-based Gaussian source: every draw is a pure function of
/// (seed, stream, counter), so ensembles are reproducible bit-for-bit
/// under any parallel schedule and the SAME g_n is shared by every field
/// kind/depth sampled from the same (seed, stream) — the coupling that
/// the per-omega limit studies rely on.
class GaussianStream {
  public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix64(mix64(seed, 0x494C575F4C4142ULL), stream)) {}

    /// The paper-convention complex Gaussian g_n: Re and Im independent,
    /// mean zero, variance pi each (so Var g_n = 2 pi).
    std::complex<double> mode_gaussian(std::int64_t n) const {
        const std::uint64_t h = mix64(key_, static_cast<std::uint64_t>(n));
        const double u1 = uniform01(mix64(h, 1));
        const double u2 = uniform01(mix64(h, 2));
        const double pi = 3.14159265358979323846;
        const double r = std::sqrt(-2.0 * std::log(u1)) * std::sqrt(pi);
        return {r * std::cos(2.0 * pi * u2), r * std::sin(2.0 * pi * u2)};
    }

    /// uniform in (0,1], decorrelated from mode_gaussian draws
    double uniform(std::uint64_t counter) const {
        return uniform01(mix64(key_ ^ 0xA5A5A5A5A5A5A5A5ULL, counter));
    }

  private:
    std::uint64_t key_;
};

} // namespace ilw
