#pragma once

#include <string>
#include <vector>

#include "ilw/field.hpp"

namespace ilw {

/// Product of mean-zero Gaussians indexed by the positive frequencies
/// 1..M; var(n-1) is the variance of each of the two (Re, Im) components
/// at frequency n, so one entry stands for the whole +-n pair.
struct ProductGaussianSpec {
    Eigen::ArrayXd var;
    std::string tag;

    int modes() const { return static_cast<int>(var.size()); }

    /// pi/S(n) for the family's symbol S.
    static ProductGaussianSpec from_kind(const FieldKind& kind, int modes);
};

/// Hellinger integral H(mu, nu) = prod_n f_n^2 with the per-component
/// factor f_n = sqrt(2) (a_n b_n)^{1/4} / sqrt(a_n + b_n); the square
/// accounts for the +-n pair. Accumulated in log space; a hard-mismatched
/// pair can drive H below the double range, which saturates to 0.
double hellinger_product(const ProductGaussianSpec& a, const ProductGaussianSpec& b);

/// d_H = sqrt(1 - H(mu, nu)).
double hellinger_distance(const ProductGaussianSpec& a, const ProductGaussianSpec& b);

struct KlResult {
    double kl = 0.0;         // sum_{n<=M} phi(n / K_delta(n)), phi(t) = t - 1 - log t
    double tail_bound = 0.0; // bound on the discarded n > M part
};

/// Kullback-Leibler divergence d_KL(mu_delta, mu_infty) over the first M
/// frequency pairs, plus an analytic bound on the tail (phi(t) <= (t-1)^2
/// and n - K <= 1/delta).
KlResult kl_deep(const DepthParam& depth, int modes);

struct PinskerResult {
    double hellinger = 0.0;
    double pinsker_rhs = 0.0; // sqrt(KL/2)
    bool ordered = false;     // d_H <= sqrt(KL/2)
};

/// Checks d_H(mu_delta, mu_infty) <= sqrt(d_KL/2) on the same M modes.
PinskerResult pinsker_check(const DepthParam& depth, int modes);

/// Kakutani partial sum S_M = sum_{n<=M} (a_n/b_n - 1)^2; bounded iff the
/// two product Gaussians are equivalent.
double kakutani_sum(const ProductGaussianSpec& a, const ProductGaussianSpec& b, int modes);

/// Scheffe total-variation estimate between two reweightings of one base
/// measure: given unnormalized density values f_i, g_i on a common sample,
///   d_TV = 1/2 E | f/Z_f - g/Z_g |,  Z the mean density.
MeanSE scheffe_tv(const std::vector<double>& f, const std::vector<double>& g);

/// Ky-Fan distance E[ 1 ^ ||X - Y||_{H^s} ] of two coupled field samples.
MeanSE ky_fan(const std::vector<SpectralField>& a, const std::vector<SpectralField>& b,
              double s);

/// Energy distance between the joint laws of the selected Fourier modes
/// under two weighted ensembles; the finite-marginal surrogate for weak
/// convergence. Pass normalized weights of matching lengths.
double weak_marginal_distance(const std::vector<SpectralField>& a,
                              const Eigen::ArrayXd& wa,
                              const std::vector<SpectralField>& b,
                              const Eigen::ArrayXd& wb,
                              const std::vector<int>& modes);

/// The mode-truncated Radon-Nikodym derivative d mu_delta / d mu_infty:
///   prod_{n<=M} (K_delta(n)/n) exp((n - K_delta(n)) |u^(n)|^2 / 2pi).
double deep_rn_density(const SpectralField& u, const DepthParam& depth, int modes);

} // namespace ilw
