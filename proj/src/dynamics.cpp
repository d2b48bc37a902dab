#include "ilw/dynamics.hpp"

#include <cmath>

#include "ilw/dispersion.hpp"
#include "ilw/errors.hpp"
#include "ilw/parallel.hpp"

namespace ilw {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

EvolutionSpec EvolutionSpec::deep(const DepthParam& depth, int k, int N) {
    if (depth.is_shallow()) throw family_error("DeepGILW has no shallow member");
    EvolutionSpec s;
    s.family = Family::DeepGILW;
    s.depth = depth;
    s.k = k;
    s.N = N;
    s.sigma = sigma_deep(depth, N);
    s.renormalized = (k != 2);
    return s;
}

EvolutionSpec EvolutionSpec::scaled(const DepthParam& depth, int k, int N, bool sigma_limit) {
    if (depth.is_infinite()) throw family_error("ScaledGILW has no deep-water member");
    EvolutionSpec s;
    s.family = Family::ScaledGILW;
    s.depth = depth;
    s.k = k;
    s.N = N;
    if (depth.is_shallow())
        s.sigma = sigma_limit ? sigma_kdv_limit() : sigma_kdv(N);
    else
        s.sigma = sigma_shallow(depth, N);
    s.renormalized = (k != 2);
    return s;
}

FieldKind EvolutionSpec::base_kind() const {
    if (family == Family::DeepGILW) return FieldKind::deep(depth);
    return depth.is_shallow() ? FieldKind::kdv() : FieldKind::scaled(depth);
}

std::string EvolutionSpec::str() const {
    const char* fam = family == Family::DeepGILW ? "gILW" : "scaled-gILW";
    if (family == Family::DeepGILW && depth.is_infinite()) fam = "gBO";
    if (family == Family::ScaledGILW && depth.is_shallow()) fam = "gKdV";
    return std::string(fam) + "(delta=" + depth.str() + ", k=" + std::to_string(k) +
           ", N=" + std::to_string(N) + ")";
}

double linear_frequency(const EvolutionSpec& spec, std::int64_t n) {
    if (n == 0) throw std::domain_error("linear_frequency: the n = 0 mode is absent");
    const double symbol = spec.family == EvolutionSpec::Family::DeepGILW
                              ? k_delta(spec.depth, n)
                              : l_delta(spec.depth, n);
    return static_cast<double>(n) * symbol;
}

namespace {

WickContext flow_context(const EvolutionSpec& spec) {
    WickVariance sv = spec.sigma;
    sv.sigma = spec.sigma_effective();
    return {spec.k, spec.N, sv, spec.base_kind()};
}

/// IF-RK4 engine on the low modes with the high part carried exactly.
/// All per-step work runs on preallocated scratch.
struct Engine {
    EvolutionSpec spec;
    int N, gridsize;
    double sigma_eff;
    double dt = 0.0;
    long steps_done = 0;
    Eigen::ArrayXcd low0, low; // modes 1..N at t0 and now
    Eigen::ArrayXcd high0;     // initial modes N+1..cutoff0
    Eigen::ArrayXd symbol_low; // S(n), n = 1..N
    Eigen::ArrayXd omega_low, omega_high;
    Eigen::ArrayXcd e_full, e_half; // exp(i omega dt), exp(i omega dt/2)
    mutable Eigen::ArrayXd grid;
    mutable Eigen::ArrayXcd ka, kb, kc, kd, stage, wickc;

    Engine(const SpectralField& u0, const EvolutionSpec& s)
        : spec(s),
          N(s.N),
          gridsize(WickContext{s.k, s.N, s.sigma, s.base_kind()}.gridsize()),
          sigma_eff(s.sigma_effective()) {
        low0 = Eigen::ArrayXcd::Zero(N);
        const int nlow = std::min(N, u0.cutoff);
        low0.head(nlow) = u0.coeffs.head(nlow);
        const int nhigh = std::max(0, u0.cutoff - N);
        high0 = u0.coeffs.tail(nhigh);
        omega_low.resize(N);
        symbol_low.resize(N);
        for (int n = 1; n <= N; ++n) {
            omega_low(n - 1) = linear_frequency(spec, n);
            symbol_low(n - 1) = omega_low(n - 1) / n;
        }
        omega_high.resize(nhigh);
        for (int j = 0; j < nhigh; ++j) omega_high(j) = linear_frequency(spec, N + 1 + j);
        grid.resize(gridsize);
        ka.resize(N); kb.resize(N); kc.resize(N); kd.resize(N);
        stage.resize(N); wickc.resize(N);
        reset();
    }

    void reset() {
        low = low0;
        steps_done = 0;
    }

    void set_dt(double step) {
        dt = step;
        e_full.resize(N);
        e_half.resize(N);
        for (int i = 0; i < N; ++i) {
            e_full(i) = std::polar(1.0, omega_low(i) * dt);
            e_half(i) = std::polar(1.0, omega_low(i) * dt / 2.0);
        }
    }

    // F_N(c) = i n P_N W(c^k) without intermediate allocations
    void rhs_into(const Eigen::ArrayXcd& c, Eigen::ArrayXcd& out) const {
        if (spec.linear_only) {
            out.setZero();
            return;
        }
        to_physical_into(c, gridsize, grid);
        for (int j = 0; j < gridsize; ++j) grid(j) = hermite(spec.k, grid(j), sigma_eff);
        from_physical_into(grid, N, wickc);
        for (int n = 1; n <= N; ++n)
            out(n - 1) = std::complex<double>(0.0, static_cast<double>(n)) * wickc(n - 1);
    }

    void advance() {
        const double h = dt;
        rhs_into(low, ka);
        stage = e_half * (low + (h / 2.0) * ka);
        rhs_into(stage, kb);
        stage = e_half * low + (h / 2.0) * kb;
        rhs_into(stage, kc);
        stage = e_full * low + h * (e_half * kc);
        rhs_into(stage, kd);
        low = e_full * low + (h / 6.0) * (e_full * ka + 2.0 * (e_half * (kb + kc)) + kd);
        ++steps_done;
    }

    double t() const { return dt * static_cast<double>(steps_done); }

    double low_l2() const { return low.abs2().sum() / kPi; }

    SpectralField materialize() const {
        const int cutoff = N + static_cast<int>(high0.size());
        Eigen::ArrayXcd c(cutoff);
        c.head(N) = low;
        const double tt = t();
        for (int j = 0; j < high0.size(); ++j)
            c(N + j) = high0(j) * std::polar(1.0, omega_high(j) * tt);
        return SpectralField(cutoff, std::move(c));
    }

    double ham() const {
        const double kin = (symbol_low * low.abs2()).sum() / (2.0 * kPi);
        to_physical_into(low, gridsize, grid);
        long double s = 0.0L;
        for (int j = 0; j < gridsize; ++j) s += hermite(spec.k + 1, grid(j), sigma_eff);
        return kin + static_cast<double>(s) * 2.0 * kPi / (gridsize * (spec.k + 1));
    }
};

} // namespace

SpectralField nonlinearity(const SpectralField& field, const EvolutionSpec& spec) {
    const SpectralField w = wick_power(field, flow_context(spec));
    Eigen::ArrayXcd out(spec.N);
    for (int n = 1; n <= spec.N; ++n)
        out(n - 1) = std::complex<double>(0, static_cast<double>(n)) * w.coeffs(n - 1);
    return SpectralField(spec.N, std::move(out));
}

SpectralField step(const SpectralField& field, const EvolutionSpec& spec, double dt) {
    Engine e(field, spec);
    e.set_dt(dt);
    e.advance();
    return e.materialize();
}

double default_dt(const EvolutionSpec& spec) {
    double ratio = 0.0;
    for (int n = 1; n <= spec.N; ++n)
        ratio = std::max(ratio, std::abs(linear_frequency(spec, n)) /
                                    (static_cast<double>(n) * static_cast<double>(n)));
    // |omega(n)| = n S(n): S(n)/n <= ratio, so 0.5 / (N * ratio)
    return 0.5 / (spec.N * std::max(ratio, 1e-12));
}

double hamiltonian(const SpectralField& field, const EvolutionSpec& spec) {
    const SpectralField u = project(field, spec.N);
    long double kin = 0.0L;
    for (int n = 1; n <= u.cutoff; ++n) {
        const double symbol = spec.family == EvolutionSpec::Family::DeepGILW
                                  ? k_delta(spec.depth, n)
                                  : l_delta(spec.depth, n);
        kin += symbol * std::norm(u.coeffs(n - 1));
    }
    return static_cast<double>(kin) / (2.0 * kPi) + potential_r(u, flow_context(spec));
}

namespace {

TrajectoryPoint diag_point(const Engine& e, double s_index) {
    TrajectoryPoint p;
    p.t = e.t();
    p.mean = 0.0;
    p.low_l2 = e.low_l2();
    p.hamiltonian = e.ham();
    p.hs_norm = sobolev_norm(e.materialize(), s_index);
    return p;
}

} // namespace

TrajectoryRecord evolve(const SpectralField& u0, const EvolutionSpec& spec, double T,
                        const StepPolicy& policy) {
    const double base_dt = policy.dt > 0.0 ? policy.dt : default_dt(spec);
    Engine e(u0, spec);
    // with the nonlinearity disabled only the linear invariants survive
    const bool check_ham = !spec.linear_only;
    const double h0 = check_ham ? e.ham() : 0.0;
    const double l0 = e.low_l2();
    const double h_scale = std::max(std::abs(h0), 1e-6);
    const double l_scale = std::max(l0, 1e-12);
    for (int attempt = 0;; ++attempt) {
        const double mag = base_dt / static_cast<double>(1 << attempt);
        long steps = T == 0.0 ? 0 : std::lround(std::ceil(std::abs(T) / mag - 1e-12));
        const double dt = steps == 0 ? mag : T / static_cast<double>(steps);
        e.reset();
        e.set_dt(dt);

        TrajectoryRecord rec;
        rec.dt_used = dt;
        rec.halvings = attempt;
        auto record = [&] {
            rec.diagnostics.push_back(diag_point(e, policy.record_s));
            rec.times.push_back(e.t());
            rec.snapshots.push_back(e.materialize());
        };
        record();

        bool ok = true;
        for (long i = 1; i <= steps; ++i) {
            e.advance();
            const bool last = i == steps;
            if (policy.check_stride > 0 && (i % policy.check_stride == 0 || last)) {
                // written so that a non-finite state fails the check too
                const bool ham_ok =
                    !check_ham || std::abs(e.ham() - h0) <= policy.drift_tol * h_scale;
                const bool l2_ok = std::abs(e.low_l2() - l0) <= policy.drift_tol * l_scale;
                if (!ham_ok || !l2_ok) {
                    ok = false;
                    break;
                }
            }
            if ((policy.snapshot_stride > 0 && i % policy.snapshot_stride == 0 && !last) || last)
                record();
        }
        if (ok) return rec;
        if (attempt >= policy.max_halvings)
            throw step_error("evolve: conservation tolerance unreachable for " + spec.str());
    }
}

std::vector<Observable> standard_observables(const WickContext& ctx) {
    std::vector<Observable> obs;
    obs.push_back({"wick_mass", [ctx](const SpectralField& u) { return wick_mass(u, ctx); }});
    obs.push_back({"hs_half_sq", [](const SpectralField& u) {
                       const double v = sobolev_norm(u, -0.5);
                       return v * v;
                   }});
    obs.push_back({"triad_12", [](const SpectralField& u) {
                       const std::complex<double> c1 = u.coeff(1);
                       return (c1 * c1 * std::conj(u.coeff(2))).real();
                   }});
    return obs;
}

InvarianceReport invariance_test(const EvolutionSpec& spec, const DensitySpec& dspec,
                                 const std::vector<Observable>& observables, int count,
                                 double T, std::uint64_t seed, const StepPolicy& policy,
                                 bool use_mh, double mh_step) {
    const WickContext ctx = WickContext::make(spec.k, spec.N, spec.base_kind());
    WeightedEnsemble ens = use_mh ? mh_sample(ctx, dspec, count, mh_step, seed)
                                  : snis_sample(ctx, dspec, count, seed);
    InvarianceReport rep;
    rep.ess = ens.ess;
    rep.acceptance_rate = ens.acceptance_rate;

    WeightedEnsemble evolved = ens;
    if (T != 0.0 && !ens.fields.empty()) {
        // pilot member fixes a workable dt so the rest skip the halving search
        StepPolicy pol = policy;
        pol.dt = evolve(ens.fields.front(), spec, T, policy).dt_used;
        parallel_for(evolved.fields.size(), [&](std::size_t i) {
            evolved.fields[i] = evolve(ens.fields[i], spec, T, pol).final_state();
        });
    }
    for (const auto& ob : observables) {
        const MeanSE before = ensemble_mean_se(ens, ensemble_map(ens, ob.fn));
        const MeanSE after = ensemble_mean_se(evolved, ensemble_map(evolved, ob.fn));
        InvarianceRow row;
        row.name = ob.name;
        row.before = before.mean;
        row.before_se = before.se;
        row.after = after.mean;
        row.after_se = after.se;
        const double band = 3.0 * std::sqrt(before.se * before.se + after.se * after.se);
        row.pass = std::abs(after.mean - before.mean) <= band;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

std::vector<LimitGapRow> limit_study(LimitSide side, const std::vector<double>& deltas, int N,
                                     int k, std::uint64_t seed, double T, double s,
                                     const StepPolicy& policy) {
    const EvolutionSpec limit_spec = side == LimitSide::Deep
                                         ? EvolutionSpec::deep(DepthParam::infinite(), k, N)
                                         : EvolutionSpec::scaled(DepthParam::shallow(), k, N);
    std::vector<LimitGapRow> rows(deltas.size());
    parallel_for(deltas.size(), [&](std::size_t di) {
        const DepthParam depth = DepthParam::finite(deltas[di]);
        const EvolutionSpec spec_d = side == LimitSide::Deep ? EvolutionSpec::deep(depth, k, N)
                                                             : EvolutionSpec::scaled(depth, k, N);
        GaussianStream gs(seed, 0);
        const SpectralField u0 = sample_field(spec_d.base_kind(), N, gs);
        const SpectralField v0 = sample_field(limit_spec.base_kind(), N, gs);

        double dt = policy.dt > 0.0 ? policy.dt
                                    : std::min(default_dt(spec_d), default_dt(limit_spec));
        const long steps = std::lround(std::ceil(T / dt - 1e-12));
        dt = T / static_cast<double>(steps);
        Engine ed(u0, spec_d);
        Engine el(v0, limit_spec);
        ed.set_dt(dt);
        el.set_dt(dt);
        double sup = sobolev_norm(ed.materialize() - el.materialize(), s);
        for (long i = 0; i < steps; ++i) {
            ed.advance();
            el.advance();
            sup = std::max(sup, sobolev_norm(ed.materialize() - el.materialize(), s));
        }
        rows[di] = {deltas[di], sup};
    });
    return rows;
}

} // namespace ilw
