#include <cmath>
#include <complex>

#include "doctest.h"
#include "ilw/dispersion.hpp"
#include "ilw/dynamics.hpp"
#include "ilw/parallel.hpp"

using namespace ilw;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("linear_frequency: families and limits") {
    const EvolutionSpec kdv = EvolutionSpec::scaled(DepthParam::shallow(), 3, 8);
    CHECK(linear_frequency(kdv, 2) == 8.0);
    CHECK(linear_frequency(kdv, -2) == -8.0);

    const EvolutionSpec bo = EvolutionSpec::deep(DepthParam::infinite(), 3, 8);
    CHECK(linear_frequency(bo, -3) == -9.0);
    CHECK(linear_frequency(bo, 3) == 9.0);

    for (double d : {2.0, 8.0, 32.0}) {
        const EvolutionSpec ilw = EvolutionSpec::deep(DepthParam::finite(d), 3, 8);
        for (int n = 1; n <= 8; ++n) {
            const double gap = std::abs(linear_frequency(ilw, n) - linear_frequency(bo, n));
            CHECK(gap <= n / d + 1e-12);
        }
    }
    CHECK_THROWS_AS(linear_frequency(kdv, 0), std::domain_error);
}

TEST_CASE("nonlinearity: zero field, mean zero, quadratic convolution by hand") {
    EvolutionSpec spec = EvolutionSpec::deep(DepthParam::finite(2.0), 2, 4);
    CHECK(spec.renormalized == false);
    const SpectralField fz = nonlinearity(SpectralField::zero(4), spec);
    CHECK(fz.coeffs.abs().maxCoeff() == 0.0);

    // u = cos(x): u^(1) = pi; u^2 = 1/2 + cos(2x)/2, so F = d_x P_N(u^2)
    // has only the +-2 modes with F^(2) = i 2 * (pi/2) = i pi.
    SpectralField u = SpectralField::zero(4);
    u.coeffs(0) = kPi;
    const SpectralField f = nonlinearity(u, spec);
    CHECK(std::abs(f.coeff(1)) < 1e-12);
    CHECK(std::abs(f.coeff(2) - std::complex<double>(0.0, kPi)) < 1e-12);
    CHECK(std::abs(f.coeff(3)) < 1e-12);
    CHECK(std::abs(f.coeff(4)) < 1e-12);
}

TEST_CASE("step/evolve: zero field is a fixed point") {
    const EvolutionSpec spec = EvolutionSpec::deep(DepthParam::finite(2.0), 3, 8);
    const TrajectoryRecord rec = evolve(SpectralField::zero(8), spec, 2.0);
    CHECK(rec.final_state().coeffs.abs().maxCoeff() == 0.0);
    CHECK(rec.diagnostics.back().hamiltonian ==
          doctest::Approx(rec.diagnostics.front().hamiltonian).epsilon(1e-15));
}

TEST_CASE("evolve: linear-only phases are exact") {
    EvolutionSpec spec = EvolutionSpec::deep(DepthParam::finite(2.0), 3, 8);
    spec.linear_only = true;
    GaussianStream gs(51);
    const SpectralField u0 = sample_field(spec.base_kind(), 16, gs);
    StepPolicy pol;
    pol.dt = 0.01;
    const double T = 1.0;
    const TrajectoryRecord rec = evolve(u0, spec, T, pol);
    const SpectralField uf = rec.final_state();
    for (int n = 1; n <= 16; ++n) {
        const std::complex<double> expect =
            u0.coeff(n) * std::polar(1.0, linear_frequency(spec, n) * T);
        CHECK(std::abs(uf.coeff(n) - expect) <= 1e-12 * std::abs(u0.coeff(n)));
    }
}

TEST_CASE("evolve: conservation and high-mode exactness") {
    const EvolutionSpec spec = EvolutionSpec::deep(DepthParam::finite(2.0), 3, 16);
    GaussianStream gs(52);
    const SpectralField u0 = sample_field(spec.base_kind(), 32, gs);
    StepPolicy pol;
    pol.drift_tol = 1e-8;
    const TrajectoryRecord rec = evolve(u0, spec, 2.0, pol);
    const auto& a = rec.diagnostics.front();
    const auto& b = rec.diagnostics.back();
    CHECK(a.mean == 0.0);
    CHECK(b.mean == 0.0);
    CHECK(std::abs(b.low_l2 - a.low_l2) <= 1e-8 * a.low_l2);
    CHECK(std::abs(b.hamiltonian - a.hamiltonian) <= 1e-8 * std::abs(a.hamiltonian));
    const SpectralField uf = rec.final_state();
    for (int n = 17; n <= 32; ++n)
        CHECK(std::abs(std::abs(uf.coeff(n)) - std::abs(u0.coeff(n))) <=
              1e-14 * std::abs(u0.coeff(n)));
}

TEST_CASE("evolve: time reversal returns the initial data") {
    const EvolutionSpec spec = EvolutionSpec::deep(DepthParam::finite(2.0), 3, 32);
    GaussianStream gs(53);
    // moderate amplitude keeps the Lyapunov-amplified roundoff floor far
    // below the 1e-8 target (full Gibbs amplitude floors near 3e-6)
    const SpectralField u0 = 0.3 * sample_field(spec.base_kind(), 32, gs);
    StepPolicy pol;
    pol.check_stride = 0;
    double err = 1e300;
    for (pol.dt = default_dt(spec) / 4.0; pol.dt > 1e-7; pol.dt /= 2.0) {
        const TrajectoryRecord fwd = evolve(u0, spec, 1.0, pol);
        const TrajectoryRecord bwd = evolve(fwd.final_state(), spec, -1.0, pol);
        err = sobolev_norm(bwd.final_state() - u0, 0.0);
        if (err <= 1e-8) break;
    }
    CHECK(err <= 1e-8);
}

TEST_CASE("hamiltonian: explicit pieces") {
    const EvolutionSpec spec = EvolutionSpec::deep(DepthParam::finite(2.0), 3, 8);
    const double sig = spec.sigma.sigma;
    CHECK(hamiltonian(SpectralField::zero(8), spec) ==
          doctest::Approx(kPi / 2.0 * 3.0 * sig * sig).epsilon(1e-13));

    SpectralField one = SpectralField::zero(8);
    one.coeffs(0) = std::sqrt(2 * kPi);
    const double kin = k_delta(spec.depth, 1); // (1/2)(1/2pi)(2 S(1) 2pi)
    const double pot = potential_r(one, WickContext{3, 8, spec.sigma, spec.base_kind()});
    CHECK(hamiltonian(one, spec) == doctest::Approx(kin + pot).epsilon(1e-12));
}

TEST_CASE("step: a single call matches evolve over one step") {
    const EvolutionSpec spec = EvolutionSpec::scaled(DepthParam::finite(0.5), 3, 8);
    GaussianStream gs(54);
    const SpectralField u0 = sample_field(spec.base_kind(), 12, gs);
    const SpectralField one = step(u0, spec, 0.001);
    StepPolicy pol;
    pol.dt = 0.001;
    pol.check_stride = 0;
    const TrajectoryRecord rec = evolve(u0, spec, 0.001, pol);
    CHECK(sobolev_norm(one - rec.final_state(), 0.0) <= 1e-13);
}

TEST_CASE("invariance_test: T = 0 is exact; short run passes at 3 SE") {
    const EvolutionSpec spec = EvolutionSpec::deep(DepthParam::finite(2.0), 3, 8);
    const WickContext ctx = WickContext::make(3, 8, spec.base_kind());
    const auto obs = standard_observables(ctx);

    const InvarianceReport zero =
        invariance_test(spec, DensitySpec::defocusing(), obs, 400, 0.0, 55);
    for (const auto& row : zero.rows) {
        CHECK(row.before == row.after);
        CHECK(row.pass);
    }

    StepPolicy pol;
    pol.drift_tol = 1e-6;
    pol.check_stride = 4;
    const InvarianceReport rep =
        invariance_test(spec, DensitySpec::defocusing(), obs, 8000, 0.5, 56, pol);
    for (const auto& row : rep.rows) {
        CAPTURE(row.name);
        CHECK(row.pass);
    }

    // pathwise conservation of the low-mode L^2 observable
    GaussianStream gs(57);
    const SpectralField u0 = sample_field(spec.base_kind(), 8, gs);
    StepPolicy tight;
    tight.drift_tol = 1e-8;
    const TrajectoryRecord rec = evolve(u0, spec, 1.0, tight);
    CHECK(std::abs(rec.diagnostics.back().low_l2 - rec.diagnostics.front().low_l2) <=
          1e-8 * rec.diagnostics.front().low_l2);
}

TEST_CASE("limit_study: limit point against itself vanishes; gaps shrink") {
    // identical spec on both sides -> identical trajectories
    const auto self = limit_study(LimitSide::Deep, {}, 8, 3, 58, 0.25, -0.5);
    CHECK(self.empty());

    const auto deep = limit_study(LimitSide::Deep, {2.0, 8.0}, 8, 3, 58, 0.25, -0.5);
    CHECK(deep.size() == 2);
    CHECK(deep[1].sup_gap < deep[0].sup_gap);

    const auto shallow = limit_study(LimitSide::Shallow, {0.3, 0.1}, 8, 3, 58, 0.25, -0.5);
    CHECK(shallow[1].sup_gap < shallow[0].sup_gap);
}

TEST_CASE("evolve: k = 2 runs un-renormalized") {
    const EvolutionSpec spec = EvolutionSpec::deep(DepthParam::finite(2.0), 2, 8);
    CHECK_FALSE(spec.renormalized);
    CHECK(spec.sigma_effective() == 0.0);
    GaussianStream gs(59);
    const SpectralField u0 = sample_field(spec.base_kind(), 8, gs);
    StepPolicy pol;
    pol.drift_tol = 1e-8;
    const TrajectoryRecord rec = evolve(u0, spec, 1.0, pol);
    CHECK(std::abs(rec.diagnostics.back().hamiltonian - rec.diagnostics.front().hamiltonian) <=
          1e-8 * std::abs(rec.diagnostics.front().hamiltonian));
}
