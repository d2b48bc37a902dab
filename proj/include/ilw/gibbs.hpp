#pragma once

#include <cstdint>
#include <vector>

#include "ilw/field.hpp"
#include "ilw/hermite.hpp"

namespace ilw {

/// Everything needed to Wick-renormalize a degree-k power at truncation N:
/// the nonlinearity degree, the cutoff, the matching variance constant and
/// the field family it belongs to.
struct WickContext {
    int k = 3;
    int N = 8;
    WickVariance sigma;
    FieldKind kind;

    /// Builds the context with the family's own variance constant
    /// (sigma_{delta,N}, sigma~_{delta,N} or sigma_{KdV,N}).
    static WickContext make(int k, int N, const FieldKind& kind);

    /// Dealiased grid size: smallest power of two >= (k+1) N + 1. Exact for
    /// the degree-k product projected to |n| <= N and for the integral of
    /// the degree-(k+1) potential.
    int gridsize() const;
};

/// Gibbs density flavor.
struct DensitySpec {
    enum class Kind {
        Defocusing,  // exp(-R) with R the Wick potential, odd k
        CutoffCubic, // chi_K(int W(u^2)) exp(-(1/3) int u^3), k = 2
        TamedCubic,  // exp(-(1/3) int u^3 - A |int W(u^2)|^2), k = 2
        Flat         // density == 1 (diagnostic)
    };
    Kind kind = Kind::Defocusing;
    double K = 1.0; // cutoff size (CutoffCubic)
    double A = 1.0; // taming strength (TamedCubic)

    static DensitySpec defocusing();
    static DensitySpec cutoff_cubic(double K);
    static DensitySpec tamed_cubic(double A);
    static DensitySpec flat();
    std::string str() const;
};

/// The continuous cutoff: 1 on [-K, K], linear down to 0 on K <= |x| <= 2K.
double chi_ramp(double x, double K);

/// Degree-k Wick power H_k(u_N(x); sigma), evaluated pointwise on the
/// dealiased grid and projected back to |n| <= N.
SpectralField wick_power(const SpectralField& field, const WickContext& ctx);

/// int_T W(u_N^2) dx = int H_2(u_N; sigma) dx (exact quadrature).
double wick_mass(const SpectralField& field, const WickContext& ctx);

/// Truncated renormalized potential
///   R = 1/(k+1) int_T H_{k+1}(u_N(x); sigma) dx  (exact quadrature).
double potential_r(const SpectralField& field, const WickContext& ctx);

/// Unnormalized Gibbs density of `spec` against the base Gaussian.
double density(const SpectralField& field, const WickContext& ctx, const DensitySpec& spec);

/// Monte-Carlo sample set with self-normalized importance weights.
struct WeightedEnsemble {
    std::vector<SpectralField> fields;
    Eigen::ArrayXd weights; // normalized, sum 1
    double ess = 0.0;       // 1 / sum w_i^2, in [1, count]
    double z_estimate = 0.0; // mean unnormalized weight (partition function)
    double z_se = 0.0;
    double acceptance_rate = -1.0; // MH chains only
    bool markov = false;           // correlated samples (use batch-means SE)
    std::uint64_t seed = 0;

    int count() const { return static_cast<int>(fields.size()); }
};

/// Draw `count` base-Gaussian fields and reweight by the density.
/// base_cutoff = 0 keeps the fields at ctx.N.
WeightedEnsemble snis_sample(const WickContext& ctx, const DensitySpec& spec, int count,
                             std::uint64_t seed, int base_cutoff = 0);

/// Preconditioned Crank-Nicolson chain targeting the same measure; the
/// proposal preserves the base Gaussian exactly, so the accept ratio is a
/// plain density ratio. Unit weights; acceptance rate reported.
WeightedEnsemble mh_sample(const WickContext& ctx, const DensitySpec& spec, int count,
                           double step_scale, std::uint64_t seed);

/// Weighted ensemble mean of per-field values with the matching standard
/// error (delta-method for SNIS, batch means for chains).
MeanSE ensemble_mean_se(const WeightedEnsemble& ens, const std::vector<double>& values);

/// Evaluate an observable over the ensemble (parallel, order-stable).
std::vector<double> ensemble_map(const WeightedEnsemble& ens,
                                 const std::function<double(const SpectralField&)>& f);

/// Brute-force oracle for E |F(W(u_N^k))(n)|^2: the k-fold constrained
/// convolution sum of 1/S(n_j) times k! (2pi)^{2-k}. Limited to k <= 3,
/// N <= 32.
double chaos_second_moment(const WickContext& ctx, std::int64_t n);

/// gamma_N(z) = (1/2pi) sum_{0<|n|<=N} e^{inz}/S(n), the field covariance.
double field_covariance(const WickContext& ctx, double z);

} // namespace ilw
