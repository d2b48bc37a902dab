#include "ilw/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ilw/version.hpp"

namespace ilw {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

std::string join_list(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + fmt(v[i]);
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

} // namespace

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config: " + path);
    ExperimentConfig c;
    std::string line;
    while (std::getline(f, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "experiment") c.experiment = val;
        else if (key == "k") c.k = std::stoi(val);
        else if (key == "N") c.N = std::stoi(val);
        else if (key == "deltas") c.deltas = parse_list(val);
        else if (key == "K") c.K = std::stod(val);
        else if (key == "A") c.A = std::stod(val);
        else if (key == "samples") c.samples = std::stol(val);
        else if (key == "T") c.T = std::stod(val);
        else if (key == "dt") c.dt = std::stod(val);
        else if (key == "s") c.s = std::stod(val);
        else if (key == "eps") c.eps = std::stod(val);
        else if (key == "seed") c.seed = std::stoull(val);
        else if (key == "out_dir") c.out_dir = val;
        else throw std::runtime_error("unknown config key: " + key);
    }
    return c;
}

void ExperimentConfig::save(const std::string& path) const {
    auto f = open_out(path);
    f << "experiment = " << experiment << "\n"
      << "k = " << k << "\n"
      << "N = " << N << "\n"
      << "deltas = " << join_list(deltas) << "\n"
      << "K = " << fmt(K) << "\n"
      << "A = " << fmt(A) << "\n"
      << "samples = " << samples << "\n"
      << "T = " << fmt(T) << "\n"
      << "dt = " << fmt(dt) << "\n"
      << "s = " << fmt(s) << "\n"
      << "eps = " << fmt(eps) << "\n"
      << "seed = " << seed << "\n"
      << "out_dir = " << out_dir << "\n";
}

nlohmann::json ExperimentConfig::to_json() const {
    return {{"experiment", experiment}, {"k", k},   {"N", N},
            {"deltas", deltas},         {"K", K},   {"A", A},
            {"samples", samples},       {"T", T},   {"dt", dt},
            {"s", s},                   {"eps", eps}, {"seed", seed},
            {"out_dir", out_dir},       {"version", kVersion}};
}

std::string default_out_dir() {
    const char* env = std::getenv("ILW_OUT_DIR");
    return env && *env ? env : "out";
}

nlohmann::json to_json(const WickContext& ctx) {
    return {{"k", ctx.k},
            {"N", ctx.N},
            {"sigma", ctx.sigma.sigma},
            {"kind", ctx.kind.str()}};
}

nlohmann::json to_json(const DensitySpec& spec) {
    return {{"kind", spec.str()}, {"K", spec.K}, {"A", spec.A}};
}

nlohmann::json to_json(const EvolutionSpec& spec) {
    return {{"family", spec.str()},
            {"delta", spec.depth.str()},
            {"k", spec.k},
            {"N", spec.N},
            {"sigma", spec.sigma.sigma},
            {"renormalized", spec.renormalized}};
}

void write_field_csv(const std::string& path, const SpectralField& f, const std::string& kind,
                     const std::string& delta, std::uint64_t seed) {
    auto out = open_out(path);
    out << "# N=" << f.cutoff << " kind=" << kind << " delta=" << delta << " seed=" << seed
        << "\n";
    out << "n,re,im\n";
    for (int n = 1; n <= f.cutoff; ++n) {
        out << n << "," << fmt(f.coeffs(n - 1).real()) << "," << fmt(f.coeffs(n - 1).imag())
            << "\n";
    }
}

FieldSnapshot read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open field snapshot: " + path);
    std::string header;
    std::getline(in, header);
    FieldSnapshot snap;
    int N = 0;
    std::stringstream hs(header);
    std::string tok;
    while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "N") N = std::stoi(val);
        else if (key == "kind") snap.kind = val;
        else if (key == "delta") snap.delta = val;
        else if (key == "seed") snap.seed = std::stoull(val);
    }
    std::string line;
    std::getline(in, line); // column header
    Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(N);
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::stringstream ls(line);
        std::string ns, re, im;
        std::getline(ls, ns, ',');
        std::getline(ls, re, ',');
        std::getline(ls, im, ',');
        const int n = std::stoi(ns);
        c(n - 1) = {std::stod(re), std::stod(im)};
    }
    snap.field = SpectralField(N, std::move(c));
    return snap;
}

void write_ensemble_csv(const std::string& path, const WeightedEnsemble& ens,
                        const std::vector<std::string>& names,
                        const std::vector<std::vector<double>>& columns) {
    auto out = open_out(path);
    out << "sample,weight";
    for (const auto& n : names) out << "," << n;
    out << "\n";
    for (int i = 0; i < ens.count(); ++i) {
        out << i << "," << fmt(ens.weights(i));
        for (const auto& col : columns) out << "," << fmt(col[i]);
        out << "\n";
    }
}

void write_ensemble_manifest(const std::string& path, const WickContext& ctx,
                             const DensitySpec& spec, const WeightedEnsemble& ens) {
    nlohmann::json j = {{"context", to_json(ctx)},
                        {"density", to_json(spec)},
                        {"seed", ens.seed},
                        {"count", ens.count()},
                        {"ess", ens.ess},
                        {"z_estimate", ens.z_estimate},
                        {"z_se", ens.z_se},
                        {"acceptance_rate", ens.acceptance_rate},
                        {"version", kVersion}};
    open_out(path) << j.dump(2) << "\n";
}

void write_trajectory_csv(const std::string& path, const TrajectoryRecord& rec) {
    auto out = open_out(path);
    out << "t,mean,low_l2,hamiltonian,hs_norm\n";
    for (const auto& p : rec.diagnostics)
        out << fmt(p.t) << "," << fmt(p.mean) << "," << fmt(p.low_l2) << ","
            << fmt(p.hamiltonian) << "," << fmt(p.hs_norm) << "\n";
}

void write_trajectory_manifest(const std::string& path, const EvolutionSpec& spec,
                               const TrajectoryRecord& rec, std::uint64_t seed) {
    nlohmann::json j = {{"spec", to_json(spec)},
                        {"seed", seed},
                        {"dt_used", rec.dt_used},
                        {"halvings", rec.halvings},
                        {"points", rec.diagnostics.size()},
                        {"version", kVersion}};
    open_out(path) << j.dump(2) << "\n";
}

void write_distance_report(const std::string& path, const std::string& pair,
                           const std::string& metric, double value, double stderr_,
                           const nlohmann::json& params, std::uint64_t seed) {
    nlohmann::json j = {{"pair", pair},   {"metric", metric}, {"value", value},
                        {"stderr", stderr_}, {"params", params}, {"seed", seed},
                        {"version", kVersion}};
    open_out(path) << j.dump(2) << "\n";
}

void write_long_csv(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
    auto out = open_out(path);
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
}

} // namespace ilw
