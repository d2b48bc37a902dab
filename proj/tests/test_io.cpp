#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "ilw/io.hpp"

using namespace ilw;

namespace {
std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}
} // namespace

TEST_CASE("ExperimentConfig: lossless round trip") {
    ExperimentConfig c;
    c.experiment = "deep-limit";
    c.k = 3;
    c.N = 24;
    c.deltas = {2.0, 8.125, 32.0078125, 1e-3};
    c.K = 1.25;
    c.A = 0.75;
    c.samples = 12345;
    c.T = 2.5;
    c.dt = 0.001220703125;
    c.s = -0.5;
    c.eps = 0.3333333333333333;
    c.seed = 123456789012345ULL;
    c.out_dir = "results/run1";
    const std::string path = tmp_path("ilw_config_test.cfg");
    c.save(path);
    const ExperimentConfig r = ExperimentConfig::load(path);
    CHECK(r.experiment == c.experiment);
    CHECK(r.k == c.k);
    CHECK(r.N == c.N);
    CHECK(r.deltas == c.deltas);
    CHECK(r.K == c.K);
    CHECK(r.A == c.A);
    CHECK(r.samples == c.samples);
    CHECK(r.T == c.T);
    CHECK(r.dt == c.dt);
    CHECK(r.s == c.s);
    CHECK(r.eps == c.eps);
    CHECK(r.seed == c.seed);
    CHECK(r.out_dir == c.out_dir);
    std::remove(path.c_str());

    CHECK_THROWS(ExperimentConfig::load(tmp_path("ilw_missing_config.cfg")));
}

TEST_CASE("field snapshot: round trip with metadata") {
    GaussianStream gs(61);
    const FieldKind kind = FieldKind::deep(DepthParam::finite(2.0));
    const SpectralField f = sample_field(kind, 12, gs);
    const std::string path = tmp_path("ilw_field_test.csv");
    write_field_csv(path, f, kind.str(), kind.depth.str(), 61);
    const FieldSnapshot snap = read_field_csv(path);
    CHECK(snap.field.cutoff == 12);
    CHECK(snap.seed == 61);
    CHECK(snap.kind == kind.str());
    for (int n = 1; n <= 12; ++n) CHECK(snap.field.coeff(n) == f.coeff(n));
    std::remove(path.c_str());
}

TEST_CASE("manifests and reports are valid JSON") {
    const WickContext ctx = WickContext::make(3, 8, FieldKind::deep(DepthParam::finite(2.0)));
    const WeightedEnsemble ens = snis_sample(ctx, DensitySpec::defocusing(), 100, 62);
    const std::string mpath = tmp_path("ilw_manifest_test.json");
    write_ensemble_manifest(mpath, ctx, DensitySpec::defocusing(), ens);
    std::ifstream in(mpath);
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j["count"] == 100);
    CHECK(j["context"]["N"] == 8);
    CHECK(j.contains("ess"));
    CHECK(j.contains("z_estimate"));
    std::remove(mpath.c_str());

    const std::string dpath = tmp_path("ilw_report_test.json");
    write_distance_report(dpath, "mu_2 vs mu_inf", "kl", 0.125, 0.0, {{"modes", 100}}, 7);
    std::ifstream din(dpath);
    nlohmann::json dj = nlohmann::json::parse(din);
    CHECK(dj["metric"] == "kl");
    CHECK(dj["value"] == 0.125);
    std::remove(dpath.c_str());
}

TEST_CASE("trajectory csv carries the diagnostics") {
    const EvolutionSpec spec = EvolutionSpec::deep(DepthParam::finite(2.0), 3, 8);
    GaussianStream gs(63);
    StepPolicy pol;
    pol.snapshot_stride = 2;
    pol.drift_tol = 1e-6;
    const TrajectoryRecord rec = evolve(sample_field(spec.base_kind(), 8, gs), spec, 0.2, pol);
    const std::string path = tmp_path("ilw_traj_test.csv");
    write_trajectory_csv(path, rec);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,mean,low_l2,hamiltonian,hs_norm");
    int rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == static_cast<int>(rec.diagnostics.size()));
    // times strictly increasing
    for (std::size_t i = 1; i < rec.times.size(); ++i) CHECK(rec.times[i] > rec.times[i - 1]);
    std::remove(path.c_str());
}
