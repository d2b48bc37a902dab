// ilwlab: command-line laboratory for the ILW Gibbs-measure experiments.
// Subcommands map one-to-one onto library operations; no computation lives
// here beyond orchestration and CSV/JSON emission.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ilw/acceptance.hpp"
#include "ilw/dispersion.hpp"
#include "ilw/dynamics.hpp"
#include "ilw/io.hpp"
#include "ilw/metrics.hpp"
#include "ilw/parallel.hpp"
#include "ilw/version.hpp"

using namespace ilw;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::string ensure_dir(const std::string& out) {
    fs::create_directories(out);
    return out;
}

DepthParam parse_depth(const std::string& s) {
    if (s == "inf" || s == "infinity") return DepthParam::infinite();
    if (s == "0" || s == "shallow") return DepthParam::shallow();
    return DepthParam::finite(std::stod(s));
}

FieldKind parse_family(const std::string& family, const DepthParam& depth) {
    if (family == "deep") return FieldKind::deep(depth);
    if (family == "scaled") return FieldKind::scaled(depth);
    if (family == "kdv") return FieldKind::kdv();
    throw CLI::ValidationError("--family", "expected deep|scaled|kdv");
}

DensitySpec parse_density(const std::string& name, double K, double A) {
    if (name == "defocusing") return DensitySpec::defocusing();
    if (name == "cutoff") return DensitySpec::cutoff_cubic(K);
    if (name == "tamed") return DensitySpec::tamed_cubic(A);
    if (name == "flat") return DensitySpec::flat();
    throw CLI::ValidationError("--density", "expected defocusing|cutoff|tamed|flat");
}

void write_manifest(const std::string& path, const ExperimentConfig& cfg) {
    std::ofstream f(path);
    f << cfg.to_json().dump(2) << "\n";
}

// ---------------------------------------------------------------- symbols

int cmd_symbols(double delta, int nmax, const std::string& out) {
    ensure_dir(out);
    const DepthParam depth = DepthParam::finite(delta);
    std::vector<std::vector<std::string>> rows;
    std::cout << "n,K_delta,K_inf,L_delta,L_0,q_delta,h\n";
    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::string> row = {std::to_string(n),
                                        fmt(k_delta(depth, n)),
                                        fmt(k_delta(DepthParam::infinite(), n)),
                                        fmt(l_delta(depth, n)),
                                        fmt(l_delta(DepthParam::shallow(), n)),
                                        fmt(q_delta(depth, n)),
                                        fmt(h_shallow(depth, n))};
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
        rows.push_back(std::move(row));
    }
    write_long_csv(out + "/symbols.csv", {"n", "K_delta", "K_inf", "L_delta", "L_0", "q_delta", "h"},
                   rows);
    return 0;
}

// ------------------------------------------------------------------- wick

int cmd_wick(double delta, const std::vector<int>& cutoffs, const std::string& out) {
    ensure_dir(out);
    const DepthParam depth = DepthParam::finite(delta);
    std::vector<std::vector<std::string>> rows;
    std::cout << "N,sigma_deep,sigma_shallow,sigma_kdv,sigma_kdv_limit\n";
    for (int N : cutoffs) {
        std::vector<std::string> row = {std::to_string(N), fmt(sigma_deep(depth, N).sigma),
                                        fmt(sigma_shallow(depth, N).sigma),
                                        fmt(sigma_kdv(N).sigma), fmt(kPi / 6.0)};
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
        rows.push_back(std::move(row));
    }
    write_long_csv(out + "/wick.csv",
                   {"N", "sigma_deep", "sigma_shallow", "sigma_kdv", "sigma_kdv_limit"}, rows);

    // quick Hermite identity residuals on a fixed grid
    double shift_resid = 0.0, scale_resid = 0.0;
    for (int k = 1; k <= 8; ++k)
        for (double x : {-1.5, 0.5, 2.0})
            for (double y : {-0.5, 1.0})
                for (double s : {0.5, 2.0}) {
                    const auto [lhs, rhs] = hermite_shift_check(k, x, y, s);
                    shift_resid = std::max(shift_resid, std::abs(lhs - rhs) / (1 + std::abs(lhs)));
                    const double sc =
                        std::pow(s, 0.5 * k) * hermite(k, x / std::sqrt(s), 1.0);
                    scale_resid =
                        std::max(scale_resid, std::abs(hermite(k, x, s) - sc) /
                                                  std::max(1.0, std::abs(sc)));
                }
    std::cout << "# hermite shift residual " << shift_resid << ", scaling residual "
              << scale_resid << "\n";
    return 0;
}

// ----------------------------------------------------------------- sample

int cmd_sample(const std::string& family, const std::string& delta_s, int k, int N, long samples,
               const std::string& density_name, double K, double A, const std::string& sampler,
               double step, std::uint64_t seed, const std::string& out) {
    ensure_dir(out);
    const FieldKind kind = parse_family(family, parse_depth(delta_s));
    const WickContext ctx = WickContext::make(k, N, kind);
    const DensitySpec spec = parse_density(density_name, K, A);
    const WeightedEnsemble ens =
        sampler == "mh" ? mh_sample(ctx, spec, static_cast<int>(samples), step, seed)
                        : snis_sample(ctx, spec, static_cast<int>(samples), seed);

    const auto obs = standard_observables(ctx);
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;
    for (const auto& ob : obs) {
        names.push_back(ob.name);
        cols.push_back(ensemble_map(ens, ob.fn));
    }
    write_ensemble_csv(out + "/ensemble.csv", ens, names, cols);
    write_ensemble_manifest(out + "/ensemble_manifest.json", ctx, spec, ens);
    std::cout << "count " << ens.count() << "  ess " << ens.ess << "  Z " << ens.z_estimate
              << " ± " << ens.z_se;
    if (ens.acceptance_rate >= 0) std::cout << "  acceptance " << ens.acceptance_rate;
    std::cout << "\n";
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const MeanSE m = ensemble_mean_se(ens, cols[i]);
        std::cout << names[i] << " = " << m.mean << " ± " << m.se << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- distances

int cmd_distances(const std::vector<double>& deltas, int modes, int N, int k, long samples,
                  std::uint64_t seed, const std::string& out) {
    ensure_dir(out);
    nlohmann::json reports = nlohmann::json::array();
    std::vector<std::vector<std::string>> rows;
    const auto bo_spec = ProductGaussianSpec::from_kind(FieldKind::deep(DepthParam::infinite()), modes);

    // deep Gibbs TV per delta over a common mu_inf base sample
    const int count = static_cast<int>(samples);
    const FieldKind bo = FieldKind::deep(DepthParam::infinite());
    const WickContext ctx_inf = WickContext::make(k, N, bo);
    const DensitySpec dens = k % 2 ? DensitySpec::defocusing() : DensitySpec::cutoff_cubic(1.0);
    std::vector<double> g(count);
    std::vector<SpectralField> base(count);
    parallel_for(count, [&](std::size_t i) {
        GaussianStream gs(seed, i);
        base[i] = sample_field(bo, N, gs);
        g[i] = density(base[i], ctx_inf, dens);
    });

    std::cout << "delta,kl,kl_tail,hellinger,pinsker_rhs,kakutani,scheffe_tv,tv_se\n";
    for (double d : deltas) {
        const DepthParam depth = DepthParam::finite(d);
        const KlResult kl = kl_deep(depth, modes);
        const PinskerResult pk = pinsker_check(depth, modes);
        const double kaku =
            kakutani_sum(ProductGaussianSpec::from_kind(FieldKind::deep(depth), modes), bo_spec, modes);

        const WickContext ctx_d = WickContext::make(k, N, FieldKind::deep(depth));
        std::vector<double> f(count);
        parallel_for(count, [&](std::size_t i) {
            f[i] = density(base[i], ctx_d, dens) * deep_rn_density(base[i], depth, N);
        });
        const MeanSE tv = scheffe_tv(f, g);

        std::vector<std::string> row = {fmt(d),          fmt(kl.kl), fmt(kl.tail_bound),
                                        fmt(pk.hellinger), fmt(pk.pinsker_rhs), fmt(kaku),
                                        fmt(tv.mean),    fmt(tv.se)};
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
        rows.push_back(row);

        const nlohmann::json params = {{"modes", modes}, {"N", N}, {"k", k}, {"samples", samples}};
        reports.push_back({{"pair", "mu_" + fmt(d) + " vs mu_inf"}, {"metric", "kl"},
                           {"value", kl.kl}, {"stderr", 0.0}, {"params", params}, {"seed", seed}});
        reports.push_back({{"pair", "mu_" + fmt(d) + " vs mu_inf"}, {"metric", "hellinger"},
                           {"value", pk.hellinger}, {"stderr", 0.0}, {"params", params},
                           {"seed", seed}});
        reports.push_back({{"pair", "rho_" + fmt(d) + " vs rho_inf"}, {"metric", "scheffe_tv"},
                           {"value", tv.mean}, {"stderr", tv.se}, {"params", params},
                           {"seed", seed}});
    }
    write_long_csv(out + "/distances.csv",
                   {"delta", "kl", "kl_tail", "hellinger", "pinsker_rhs", "kakutani",
                    "scheffe_tv", "tv_se"},
                   rows);
    std::ofstream(out + "/distances.json") << reports.dump(2) << "\n";
    return 0;
}

// ----------------------------------------------------------------- evolve

int cmd_evolve(const std::string& family, const std::string& delta_s, int k, int N, double T,
               double dt, int cutoff, int stride, std::uint64_t seed, const std::string& out) {
    ensure_dir(out);
    const DepthParam depth = parse_depth(delta_s);
    const EvolutionSpec spec = family == "scaled" ? EvolutionSpec::scaled(depth, k, N)
                                                  : EvolutionSpec::deep(depth, k, N);
    GaussianStream gs(seed, 0);
    const SpectralField u0 = sample_field(spec.base_kind(), cutoff > 0 ? cutoff : 2 * N, gs);
    StepPolicy pol;
    pol.dt = dt;
    pol.snapshot_stride = stride;
    pol.drift_tol = 1e-8;
    const TrajectoryRecord rec = evolve(u0, spec, T, pol);
    write_trajectory_csv(out + "/trajectory.csv", rec);
    write_trajectory_manifest(out + "/trajectory_manifest.json", spec, rec, seed);
    if (stride > 0)
        for (std::size_t i = 0; i < rec.snapshots.size(); ++i)
            write_field_csv(out + "/trajectory_snap" + std::to_string(i) + ".csv",
                            rec.snapshots[i], spec.base_kind().str(), spec.depth.str(), seed);
    const auto& a = rec.diagnostics.front();
    const auto& b = rec.diagnostics.back();
    std::cout << spec.str() << "  dt " << rec.dt_used << "  halvings " << rec.halvings << "\n"
              << "low_l2 drift " << std::abs(b.low_l2 - a.low_l2) / std::max(a.low_l2, 1e-300)
              << "  hamiltonian drift "
              << std::abs(b.hamiltonian - a.hamiltonian) / std::max(std::abs(a.hamiltonian), 1e-300)
              << "\n";
    return 0;
}

// ------------------------------------------------------------- invariance

int cmd_invariance(double delta, int k, int N, double T, long samples, const std::string& sampler,
                   std::uint64_t seed, const std::string& out) {
    ensure_dir(out);
    const EvolutionSpec spec = EvolutionSpec::deep(DepthParam::finite(delta), k, N);
    const WickContext ctx = WickContext::make(k, N, spec.base_kind());
    const DensitySpec dens = k % 2 ? DensitySpec::defocusing() : DensitySpec::cutoff_cubic(1.0);
    StepPolicy pol;
    pol.drift_tol = 1e-6;
    pol.check_stride = 4;
    const InvarianceReport rep =
        invariance_test(spec, dens, standard_observables(ctx), static_cast<int>(samples), T, seed,
                        pol, sampler == "mh");
    nlohmann::json jrows = nlohmann::json::array();
    std::cout << "observable,before,before_se,after,after_se,pass\n";
    for (const auto& r : rep.rows) {
        std::cout << r.name << "," << r.before << "," << r.before_se << "," << r.after << ","
                  << r.after_se << "," << (r.pass ? "yes" : "no") << "\n";
        jrows.push_back({{"name", r.name}, {"before", r.before}, {"before_se", r.before_se},
                         {"after", r.after}, {"after_se", r.after_se}, {"pass", r.pass}});
    }
    std::ofstream(out + "/invariance.json")
        << nlohmann::json{{"spec", to_json(spec)}, {"density", to_json(dens)},
                          {"T", T}, {"samples", samples}, {"seed", seed},
                          {"ess", rep.ess}, {"rows", jrows}, {"all_pass", rep.all_pass},
                          {"version", kVersion}}
               .dump(2)
        << "\n";
    std::cout << (rep.all_pass ? "invariant at 3 SE" : "NOT invariant at 3 SE") << "\n";
    return 0;
}

// ------------------------------------------------------------ limit scans

int cmd_deep_limit(int k, int N, const std::vector<double>& deltas, double T, long samples,
                   std::uint64_t seed, const std::string& out) {
    ensure_dir(out);
    const auto gaps = limit_study(LimitSide::Deep, deltas, N, k, seed, T, -0.5);

    // measure side: Scheffe TV against rho_inf plus the coupled Ky-Fan gap
    const int count = static_cast<int>(samples);
    const FieldKind bo = FieldKind::deep(DepthParam::infinite());
    const WickContext ctx_inf = WickContext::make(k, N, bo);
    const DensitySpec dens = k % 2 ? DensitySpec::defocusing() : DensitySpec::cutoff_cubic(1.0);
    std::vector<double> g(count);
    std::vector<SpectralField> base(count);
    parallel_for(count, [&](std::size_t i) {
        GaussianStream gs(seed, i);
        base[i] = sample_field(bo, N, gs);
        g[i] = density(base[i], ctx_inf, dens);
    });
    std::vector<SpectralField> bo_fields(count);
    parallel_for(count, [&](std::size_t i) {
        GaussianStream gs(seed + 1, i);
        bo_fields[i] = sample_field(bo, 64, gs);
    });

    std::vector<std::vector<std::string>> rows;
    std::cout << "delta,traj_gap,scheffe_tv,tv_se,kyfan,kyfan_se\n";
    for (std::size_t j = 0; j < deltas.size(); ++j) {
        const DepthParam depth = DepthParam::finite(deltas[j]);
        const WickContext ctx_d = WickContext::make(k, N, FieldKind::deep(depth));
        std::vector<double> f(count);
        parallel_for(count, [&](std::size_t i) {
            f[i] = density(base[i], ctx_d, dens) * deep_rn_density(base[i], depth, N);
        });
        const MeanSE tv = scheffe_tv(f, g);
        std::vector<SpectralField> xs(count);
        parallel_for(count, [&](std::size_t i) {
            GaussianStream gs(seed + 1, i);
            xs[i] = sample_field(FieldKind::deep(depth), 64, gs);
        });
        const MeanSE kf = ky_fan(xs, bo_fields, -0.5);
        std::vector<std::string> row = {fmt(deltas[j]), fmt(gaps[j].sup_gap), fmt(tv.mean),
                                        fmt(tv.se), fmt(kf.mean), fmt(kf.se)};
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
        rows.push_back(std::move(row));
    }
    write_long_csv(out + "/deep_limit.csv",
                   {"delta", "traj_gap", "scheffe_tv", "tv_se", "kyfan", "kyfan_se"}, rows);
    return 0;
}

int cmd_shallow_limit(int k, int N, const std::vector<double>& deltas, double T, long samples,
                      std::uint64_t seed, const std::string& out) {
    ensure_dir(out);
    const auto gaps = limit_study(LimitSide::Shallow, deltas, N, k, seed, T, -0.5);

    const int count = static_cast<int>(samples);
    std::vector<SpectralField> kdv_fields(count);
    parallel_for(count, [&](std::size_t i) {
        GaussianStream gs(seed + 1, i);
        kdv_fields[i] = sample_field(FieldKind::kdv(), 64, gs);
    });
    const DensitySpec dens = k % 2 ? DensitySpec::defocusing() : DensitySpec::cutoff_cubic(1.0);
    const WickContext kdv_ctx = WickContext::make(k, N, FieldKind::kdv());
    const WeightedEnsemble kdv_ens = snis_sample(kdv_ctx, dens, std::min(count, 4000), seed + 2);
    const auto kdv_spec = ProductGaussianSpec::from_kind(FieldKind::kdv(), 2000);

    std::vector<std::vector<std::string>> rows;
    std::cout << "delta,traj_gap,kyfan,kyfan_se,energy_distance,kakutani_1000,kakutani_2000\n";
    for (std::size_t j = 0; j < deltas.size(); ++j) {
        const DepthParam depth = DepthParam::finite(deltas[j]);
        std::vector<SpectralField> xs(count);
        parallel_for(count, [&](std::size_t i) {
            GaussianStream gs(seed + 1, i);
            xs[i] = sample_field(FieldKind::scaled(depth), 64, gs);
        });
        const MeanSE kf = ky_fan(xs, kdv_fields, -0.5);
        const WickContext ctx = WickContext::make(k, N, FieldKind::scaled(depth));
        const WeightedEnsemble ens = snis_sample(ctx, dens, std::min(count, 4000), seed + 2);
        const double ed = weak_marginal_distance(ens.fields, ens.weights, kdv_ens.fields,
                                                 kdv_ens.weights, {1, 2});
        const auto sc_spec = ProductGaussianSpec::from_kind(FieldKind::scaled(depth), 2000);
        std::vector<std::string> row = {fmt(deltas[j]),
                                        fmt(gaps[j].sup_gap),
                                        fmt(kf.mean),
                                        fmt(kf.se),
                                        fmt(ed),
                                        fmt(kakutani_sum(kdv_spec, sc_spec, 1000)),
                                        fmt(kakutani_sum(kdv_spec, sc_spec, 2000))};
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
        rows.push_back(std::move(row));
    }
    write_long_csv(out + "/shallow_limit.csv",
                   {"delta", "traj_gap", "kyfan", "kyfan_se", "energy_distance", "kakutani_1000",
                    "kakutani_2000"},
                   rows);
    return 0;
}

// ------------------------------------------------------------- acceptance

int cmd_acceptance(bool quick, int only, const std::string& out) {
    ensure_dir(out);
    AcceptanceOptions opt;
    opt.quick = quick;
    opt.only_id = only;
    const auto results = run_acceptance(opt, std::cout);
    nlohmann::json j = nlohmann::json::array();
    bool all = !results.empty();
    for (const auto& r : results) {
        all = all && r.pass;
        j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                     {"seconds", r.seconds}, {"detail", r.detail}});
    }
    std::ofstream(out + "/acceptance.json")
        << nlohmann::json{{"criteria", j}, {"all_pass", all}, {"quick", quick},
                          {"version", kVersion}}
               .dump(2)
        << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ILW statistical laboratory (dispersion symbols, Gibbs measures, "
                 "measure distances, truncated dynamics)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    app.fallthrough(); // --out/--config may follow the subcommand

    std::string out = default_out_dir();
    std::string config_path;
    app.add_option("--out", out, "output directory (default $ILW_OUT_DIR or ./out)")
        ->capture_default_str();
    app.add_option("--config", config_path, "key=value config file with experiment defaults");

    ExperimentConfig cfg; // defaults, possibly overwritten by --config

    // symbols
    double sym_delta = 1.0;
    int sym_nmax = 8;
    auto* sym = app.add_subcommand("symbols", "dispersion symbol tables and limits");
    sym->add_option("--delta", sym_delta, "depth parameter")->required();
    sym->add_option("--nmax", sym_nmax, "largest frequency");

    // wick
    double wick_delta = 2.0;
    std::vector<int> wick_N = {8, 64, 256};
    auto* wick = app.add_subcommand("wick", "Wick variance constants and Hermite checks");
    wick->add_option("--delta", wick_delta)->required();
    wick->add_option("--N", wick_N)->delimiter(',');

    // sample
    std::string s_family = "deep", s_delta = "2", s_density = "defocusing", s_sampler = "snis";
    double s_step = 0.25;
    auto* smp = app.add_subcommand("sample", "Gibbs ensembles with ESS and Z");
    smp->add_option("--family", s_family, "deep|scaled|kdv");
    smp->add_option("--delta", s_delta, "depth (number, inf, 0)");
    smp->add_option("--k", cfg.k);
    smp->add_option("--N", cfg.N);
    smp->add_option("--samples", cfg.samples);
    smp->add_option("--density", s_density, "defocusing|cutoff|tamed|flat");
    smp->add_option("--K", cfg.K);
    smp->add_option("--A", cfg.A);
    smp->add_option("--sampler", s_sampler, "snis|mh");
    smp->add_option("--step", s_step, "pCN step scale");
    smp->add_option("--seed", cfg.seed);

    // distances
    int dist_modes = 10000;
    auto* dist = app.add_subcommand("distances", "KL/Hellinger/Kakutani/Scheffe reports");
    dist->add_option("--deltas", cfg.deltas)->delimiter(',');
    dist->add_option("--modes", dist_modes);
    dist->add_option("--N", cfg.N);
    dist->add_option("--k", cfg.k);
    dist->add_option("--samples", cfg.samples);
    dist->add_option("--seed", cfg.seed);

    // evolve
    std::string e_family = "deep", e_delta = "2";
    int e_cutoff = 0, e_stride = 0;
    auto* evo = app.add_subcommand("evolve", "single trajectory with diagnostics");
    evo->add_option("--family", e_family, "deep|scaled");
    evo->add_option("--delta", e_delta);
    evo->add_option("--k", cfg.k);
    evo->add_option("--N", cfg.N);
    evo->add_option("--T", cfg.T);
    evo->add_option("--dt", cfg.dt);
    evo->add_option("--cutoff", e_cutoff, "initial field cutoff (default 2N)");
    evo->add_option("--snapshot-stride", e_stride);
    evo->add_option("--seed", cfg.seed);

    // invariance
    double inv_delta = 2.0;
    std::string inv_sampler = "snis";
    auto* inv = app.add_subcommand("invariance", "statistical invariance test");
    inv->add_option("--delta", inv_delta);
    inv->add_option("--k", cfg.k);
    inv->add_option("--N", cfg.N);
    inv->add_option("--T", cfg.T);
    inv->add_option("--samples", cfg.samples);
    inv->add_option("--sampler", inv_sampler, "snis|mh");
    inv->add_option("--seed", cfg.seed);

    // deep-limit / shallow-limit
    auto* dl = app.add_subcommand("deep-limit", "measure + trajectory convergence, delta -> inf");
    dl->add_option("--k", cfg.k);
    dl->add_option("--N", cfg.N);
    dl->add_option("--deltas", cfg.deltas)->delimiter(',');
    dl->add_option("--T", cfg.T);
    dl->add_option("--samples", cfg.samples);
    dl->add_option("--seed", cfg.seed);

    std::vector<double> sl_deltas = {0.3, 0.1, 0.03, 0.01};
    auto* sl = app.add_subcommand("shallow-limit", "measure + trajectory convergence, delta -> 0");
    sl->add_option("--k", cfg.k);
    sl->add_option("--N", cfg.N);
    sl->add_option("--deltas", sl_deltas)->delimiter(',');
    sl->add_option("--T", cfg.T);
    sl->add_option("--samples", cfg.samples);
    sl->add_option("--seed", cfg.seed);

    // acceptance
    bool acc_quick = false;
    int acc_only = 0;
    auto* acc = app.add_subcommand("acceptance", "run the acceptance suite");
    acc->add_flag("--quick", acc_quick, "reduced Monte-Carlo budgets");
    acc->add_option("--only", acc_only, "run a single criterion by id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }

    try {
        if (!config_path.empty()) {
            const ExperimentConfig loaded = ExperimentConfig::load(config_path);
            // config supplies defaults; explicit flags already took effect above
            auto keep = [](const CLI::App* sub, const std::string& name) {
                const CLI::Option* o = sub->get_option_no_throw(name);
                return o != nullptr && o->count() > 0;
            };
            const CLI::App* active = app.get_subcommands().front();
            ExperimentConfig merged = loaded;
            if (keep(active, "--k")) merged.k = cfg.k;
            if (keep(active, "--N")) merged.N = cfg.N;
            if (keep(active, "--deltas")) merged.deltas = cfg.deltas;
            if (keep(active, "--K")) merged.K = cfg.K;
            if (keep(active, "--A")) merged.A = cfg.A;
            if (keep(active, "--samples")) merged.samples = cfg.samples;
            if (keep(active, "--T")) merged.T = cfg.T;
            if (keep(active, "--dt")) merged.dt = cfg.dt;
            if (keep(active, "--seed")) merged.seed = cfg.seed;
            cfg = merged;
            if (out == default_out_dir() && !cfg.out_dir.empty()) out = cfg.out_dir;
        }
        ensure_dir(out);
        cfg.out_dir = out;

        int rc = 0;
        if (sym->parsed()) {
            cfg.experiment = "symbols";
            rc = cmd_symbols(sym_delta, sym_nmax, out);
        } else if (wick->parsed()) {
            cfg.experiment = "wick";
            rc = cmd_wick(wick_delta, wick_N, out);
        } else if (smp->parsed()) {
            cfg.experiment = "sample";
            rc = cmd_sample(s_family, s_delta, cfg.k, cfg.N, cfg.samples, s_density, cfg.K, cfg.A,
                            s_sampler, s_step, cfg.seed, out);
        } else if (dist->parsed()) {
            cfg.experiment = "distances";
            rc = cmd_distances(cfg.deltas, dist_modes, cfg.N, cfg.k, cfg.samples, cfg.seed, out);
        } else if (evo->parsed()) {
            cfg.experiment = "evolve";
            rc = cmd_evolve(e_family, e_delta, cfg.k, cfg.N, cfg.T, cfg.dt, e_cutoff, e_stride,
                            cfg.seed, out);
        } else if (inv->parsed()) {
            cfg.experiment = "invariance";
            rc = cmd_invariance(inv_delta, cfg.k, cfg.N, cfg.T, cfg.samples, inv_sampler, cfg.seed,
                                out);
        } else if (dl->parsed()) {
            cfg.experiment = "deep-limit";
            rc = cmd_deep_limit(cfg.k, cfg.N, cfg.deltas, cfg.T, cfg.samples, cfg.seed, out);
        } else if (sl->parsed()) {
            cfg.experiment = "shallow-limit";
            cfg.deltas = sl_deltas;
            rc = cmd_shallow_limit(cfg.k, cfg.N, sl_deltas, cfg.T, cfg.samples, cfg.seed, out);
        } else if (acc->parsed()) {
            cfg.experiment = "acceptance";
            rc = cmd_acceptance(acc_quick, acc_only, out);
        }
        write_manifest(out + "/manifest.json", cfg);
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
