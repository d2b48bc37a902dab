#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ilw {

/// Pairwise (cascade) summation; deterministic and accurate regardless of
/// how the values were produced in parallel.
inline double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n <= 32) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(std::span<const double>(v));
}

struct MeanSE {
    double mean = 0.0;
    double se = 0.0;
};

/// Sample mean with the usual standard error of the mean.
inline MeanSE mean_se(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n == 0) throw std::invalid_argument("mean_se: empty sample");
    const double m = pairwise_sum(v) / static_cast<double>(n);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) sq[i] = (v[i] - m) * (v[i] - m);
    const double var = pairwise_sum(sq) / static_cast<double>(n);
    return {m, std::sqrt(var / static_cast<double>(n))};
}

inline MeanSE mean_se(const std::vector<double>& v) {
    return mean_se(std::span<const double>(v));
}

/// Self-normalized importance-sampling mean with delta-method SE.
/// `weights` must be normalized to sum 1; uniform weights reduce to mean_se.
inline MeanSE weighted_mean_se(std::span<const double> v, std::span<const double> weights) {
    if (v.size() != weights.size() || v.empty())
        throw std::invalid_argument("weighted_mean_se: size mismatch or empty");
    std::vector<double> wv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) wv[i] = weights[i] * v[i];
    const double m = pairwise_sum(wv);
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double d = weights[i] * (v[i] - m);
        sq[i] = d * d;
    }
    return {m, std::sqrt(pairwise_sum(sq))};
}

/// Mean and batch-means SE for a correlated (Markov chain) sample.
inline MeanSE batch_mean_se(std::span<const double> v, std::size_t n_batches = 50) {
    if (v.size() < 2 * n_batches) n_batches = std::max<std::size_t>(2, v.size() / 2);
    const std::size_t b = v.size() / n_batches;
    std::vector<double> bm(n_batches);
    for (std::size_t j = 0; j < n_batches; ++j)
        bm[j] = pairwise_sum(v.subspan(j * b, b)) / static_cast<double>(b);
    MeanSE r = mean_se(bm);
    // mean over whole sample (ignoring the truncated remainder keeps batches equal)
    r.mean = pairwise_sum(v.subspan(0, n_batches * b)) / static_cast<double>(n_batches * b);
    return r;
}

} // namespace ilw
