#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ilw/dynamics.hpp"

namespace ilw {

/// One experiment's resolved parameters. Round-trips losslessly through a
/// `key = value` config file; every run echoes it into a JSON manifest.
struct ExperimentConfig {
    std::string experiment = "default";
    int k = 3;
    int N = 16;
    std::vector<double> deltas = {2.0, 8.0, 32.0, 128.0};
    double K = 1.0;   // Wick-mass cutoff size
    double A = 1.0;   // taming strength
    long samples = 10000;
    double T = 1.0;
    double dt = 0.0;  // 0 -> family default
    double s = -0.5;  // Sobolev index for gaps/norms
    double eps = 0.25; // H^{-eps} index for field comparisons
    std::uint64_t seed = 7;
    std::string out_dir = "out";

    static ExperimentConfig load(const std::string& path);
    void save(const std::string& path) const;
    nlohmann::json to_json() const;
};

/// Default output directory: $ILW_OUT_DIR if set, else "out".
std::string default_out_dir();

nlohmann::json to_json(const WickContext& ctx);
nlohmann::json to_json(const DensitySpec& spec);
nlohmann::json to_json(const EvolutionSpec& spec);

/// Field snapshot CSV: a comment header carrying (N, kind, delta, seed)
/// followed by one `n,re,im` record per stored mode.
struct FieldSnapshot {
    SpectralField field;
    std::string kind;
    std::string delta;
    std::uint64_t seed = 0;
};

void write_field_csv(const std::string& path, const SpectralField& f, const std::string& kind,
                     const std::string& delta, std::uint64_t seed);
FieldSnapshot read_field_csv(const std::string& path);

/// Ensemble CSV (sample id, weight, one column per observable) plus a JSON
/// manifest with the context, density spec, seed, ESS and Z estimate.
void write_ensemble_csv(const std::string& path, const WeightedEnsemble& ens,
                        const std::vector<std::string>& names,
                        const std::vector<std::vector<double>>& columns);
void write_ensemble_manifest(const std::string& path, const WickContext& ctx,
                             const DensitySpec& spec, const WeightedEnsemble& ens);

/// Trajectory CSV (t, mean, low_l2, hamiltonian, hs_norm) plus a manifest
/// echoing the full evolution spec.
void write_trajectory_csv(const std::string& path, const TrajectoryRecord& rec);
void write_trajectory_manifest(const std::string& path, const EvolutionSpec& spec,
                               const TrajectoryRecord& rec, std::uint64_t seed);

/// Distance report: {pair, metric, value, stderr, params, seed}.
void write_distance_report(const std::string& path, const std::string& pair,
                           const std::string& metric, double value, double stderr_,
                           const nlohmann::json& params, std::uint64_t seed);

/// Long-format CSV: one header line then rows of prefilled cells.
void write_long_csv(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);

} // namespace ilw
