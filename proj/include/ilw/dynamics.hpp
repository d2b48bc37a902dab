#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ilw/gibbs.hpp"

namespace ilw {

/// Frequency-truncated evolution family: the deep-water equations
/// (gILW / gBO at delta = infinity) or the scaled shallow-water ones
/// (scaled gILW / gKdV at the shallow limit point).
struct EvolutionSpec {
    enum class Family { DeepGILW, ScaledGILW };

    Family family = Family::DeepGILW;
    DepthParam depth = DepthParam::infinite();
    int k = 3;
    int N = 8;
    WickVariance sigma;        // frozen at its (delta, N) value for the run
    bool renormalized = true;  // false only for k = 2 (plain power)
    bool linear_only = false;  // test hook: drop the nonlinearity

    static EvolutionSpec deep(const DepthParam& depth, int k, int N);
    /// sigma_limit selects sigma_KdV = pi/6 instead of sigma_{KdV,N} at the
    /// shallow limit point.
    static EvolutionSpec scaled(const DepthParam& depth, int k, int N, bool sigma_limit = false);

    FieldKind base_kind() const;
    double sigma_effective() const { return renormalized ? sigma.sigma : 0.0; }
    std::string str() const;
};

/// Angular frequency of the linear flow: modes rotate by e^{i omega(n) t}.
/// n K_delta(n), n |n|, n L_delta(n) or n^3 depending on the family.
double linear_frequency(const EvolutionSpec& spec, std::int64_t n);

/// F_N(u): the Wick power of P_N u, projected and differentiated. Mean-zero
/// by construction.
SpectralField nonlinearity(const SpectralField& field, const EvolutionSpec& spec);

/// One integrating-factor RK4 step. Modes |n| <= N take the full nonlinear
/// flow, modes beyond N rotate by the exact linear phase.
SpectralField step(const SpectralField& field, const EvolutionSpec& spec, double dt);

struct StepPolicy {
    double dt = 0.0;          // 0 -> default_dt(spec)
    double drift_tol = 1e-8;  // relative Hamiltonian / low-mode L^2 tolerance
    int max_halvings = 10;    // halve dt and restart on a tolerance breach
    int check_stride = 1;     // steps between conservation checks
    int snapshot_stride = 0;  // 0 -> record initial and final states only
    double record_s = -0.5;   // Sobolev index of the recorded norm diagnostic
};

/// 0.5 / (N * max_n S(n)/n); the nonstiff scale left after the exact
/// integrating factor removes the linear phase.
double default_dt(const EvolutionSpec& spec);

/// Truncated energy: (1/2)(1/2pi) sum_{0<|n|<=N} S(n)|u^(n)|^2 plus the
/// (possibly Wick-renormalized) potential of P_N u.
double hamiltonian(const SpectralField& field, const EvolutionSpec& spec);

struct TrajectoryPoint {
    double t = 0.0;
    double mean = 0.0; // identically zero; recorded for the diagnostics row
    double low_l2 = 0.0;
    double hamiltonian = 0.0;
    double hs_norm = 0.0;
};

struct TrajectoryRecord {
    std::vector<TrajectoryPoint> diagnostics; // one row per stored snapshot
    std::vector<double> times;
    std::vector<SpectralField> snapshots;
    double dt_used = 0.0;
    int halvings = 0;

    const SpectralField& final_state() const { return snapshots.back(); }
};

/// Integrate to time T (either sign). If conservation drifts beyond the
/// policy tolerance the run restarts with dt halved; step_error after
/// max_halvings.
TrajectoryRecord evolve(const SpectralField& u0, const EvolutionSpec& spec, double T,
                        const StepPolicy& policy = {});

struct Observable {
    std::string name;
    std::function<double(const SpectralField&)> fn;
};

/// { int W(u_N^2) dx, ||u||_{H^{-1/2}}^2, Re(u^(1)^2 conj(u^(2))) }
std::vector<Observable> standard_observables(const WickContext& ctx);

struct InvarianceRow {
    std::string name;
    double before = 0.0, before_se = 0.0;
    double after = 0.0, after_se = 0.0;
    bool pass = false; // |after - before| <= 3 sqrt(se_b^2 + se_a^2)
};

struct InvarianceReport {
    std::vector<InvarianceRow> rows;
    bool all_pass = true;
    double ess = 0.0;
    double acceptance_rate = -1.0;
};

/// Draws a Gibbs ensemble, pushes every member through the flow to time T
/// and compares the weighted means of each observable before vs after.
InvarianceReport invariance_test(const EvolutionSpec& spec, const DensitySpec& dspec,
                                 const std::vector<Observable>& observables, int count,
                                 double T, std::uint64_t seed, const StepPolicy& policy = {},
                                 bool use_mh = false, double mh_step = 0.25);

enum class LimitSide { Deep, Shallow };

struct LimitGapRow {
    double delta = 0.0;
    double sup_gap = 0.0; // sup_{t in [0,T]} || u_delta(t) - u_limit(t) ||_{H^s}
};

/// For each delta, evolve the delta-family and the limit family from
/// coupled (same-omega) initial data in lockstep and report the sup-in-time
/// H^s gap.
std::vector<LimitGapRow> limit_study(LimitSide side, const std::vector<double>& deltas, int N,
                                     int k, std::uint64_t seed, double T, double s,
                                     const StepPolicy& policy = {});

} // namespace ilw
