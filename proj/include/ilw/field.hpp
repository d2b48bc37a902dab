#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "ilw/depth.hpp"
#include "ilw/rng.hpp"
#include "ilw/stats.hpp"

namespace ilw {

/// Mean-zero real periodic function stored as the Fourier coefficients
/// u^(n) for 1 <= n <= cutoff under the convention
///   f(x) = (1/2pi) sum_{0<|n|<=N} u^(n) e^{inx},  u^(-n) = conj(u^(n)).
/// The n = 0 mode is identically zero and never stored, so mean-zero and
/// reality hold by construction.
struct SpectralField {
    int cutoff = 0;
    Eigen::ArrayXcd coeffs; // coeffs(i) = u^(i+1)

    SpectralField() = default;
    SpectralField(int N, Eigen::ArrayXcd c);
    static SpectralField zero(int N);

    std::complex<double> coeff(int n) const; // any n, sign handled, 0 beyond cutoff
};

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double s, const SpectralField& a);

/// Which Gaussian Fourier series a field is drawn from; fixes the per-mode
/// symbol S(n) with E|u^(n)|^2 = 2pi/S(n).
struct FieldKind {
    enum class Family { DeepGauss, ScaledGauss, KdVGauss };

    Family family = Family::DeepGauss;
    DepthParam depth = DepthParam::infinite();

    static FieldKind deep(const DepthParam& d);
    static FieldKind scaled(const DepthParam& d);
    static FieldKind kdv();

    double symbol(std::int64_t n) const; // K_delta, L_delta or n^2
    std::string str() const;
};

/// Draw the truncated series with u^(n) = g_n / sqrt(S(n)); the g_n come
/// from `gauss` so coupled kinds/depths share the same omega. The scaled
/// kind is produced as sqrt(delta/3) times the deep draw, which makes the
/// coupling identity X~_delta = sqrt(delta/3) X_delta exact.
SpectralField sample_field(const FieldKind& kind, int cutoff, const GaussianStream& gauss);

/// Test hook: same construction with an arbitrary g_n source.
SpectralField sample_field_with(const FieldKind& kind, int cutoff,
                                const std::function<std::complex<double>(std::int64_t)>& g);

/// || f ||_{H^s} = ( (1/2pi) sum_{0<|n|<=N} (1+n^2)^s |u^(n)|^2 )^{1/2}
double sobolev_norm(const SpectralField& f, double s);

/// Pointwise value f(x) = (1/pi) Re sum_{n>=1} u^(n) e^{inx}.
double eval_at(const SpectralField& f, double x);

/// Dirichlet projection onto |n| <= M (identity when M >= cutoff).
SpectralField project(const SpectralField& f, int M);

/// Evaluate on the uniform grid x_j = 2pi j / gridsize, j = 0..gridsize-1.
Eigen::ArrayXd to_physical(const SpectralField& f, int gridsize);

/// Recover modes 1..N from grid values (discrete version of the Fourier
/// transform above); discards the mean and everything beyond N.
/// Requires gridsize >= 2N+1, else the high content would alias.
SpectralField from_physical(const Eigen::ArrayXd& grid, int N);

/// Allocation-free kernels behind the two transforms, for hot loops; the
/// outputs must already have the right sizes.
void to_physical_into(const Eigen::ArrayXcd& coeffs, int gridsize, Eigen::ArrayXd& out);
void from_physical_into(const Eigen::ArrayXd& grid, int N, Eigen::ArrayXcd& out);

/// Monte-Carlo estimate (with standard error) of the coupled gap
///   ( E || X_{delta,N} - X_{BO,N} ||_{H^{-eps}}^2 )^{1/2}.
MeanSE deep_limit_gap(const DepthParam& depth, int cutoff, int samples, double eps,
                      std::uint64_t seed);

} // namespace ilw
