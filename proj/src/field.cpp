#include "ilw/field.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "ilw/dispersion.hpp"
#include "ilw/errors.hpp"
#include "ilw/parallel.hpp"

namespace ilw {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SpectralField::SpectralField(int N, Eigen::ArrayXcd c) : cutoff(N), coeffs(std::move(c)) {
    if (N < 0 || coeffs.size() != N)
        throw std::invalid_argument("SpectralField: coefficient count must equal cutoff");
}

SpectralField SpectralField::zero(int N) {
    return SpectralField(N, Eigen::ArrayXcd::Zero(N));
}

std::complex<double> SpectralField::coeff(int n) const {
    if (n == 0) return {0.0, 0.0};
    const int a = std::abs(n);
    if (a > cutoff) return {0.0, 0.0};
    return n > 0 ? coeffs(a - 1) : std::conj(coeffs(a - 1));
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    const int N = std::max(a.cutoff, b.cutoff);
    Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(N);
    c.head(a.cutoff) += a.coeffs;
    c.head(b.cutoff) += b.coeffs;
    return SpectralField(N, std::move(c));
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    return a + (-1.0) * b;
}

SpectralField operator*(double s, const SpectralField& a) {
    return SpectralField(a.cutoff, s * a.coeffs);
}

FieldKind FieldKind::deep(const DepthParam& d) {
    if (d.is_shallow()) throw family_error("DeepGauss has no shallow member");
    return {Family::DeepGauss, d};
}

FieldKind FieldKind::scaled(const DepthParam& d) {
    if (!d.is_finite()) throw family_error("ScaledGauss requires a finite depth");
    return {Family::ScaledGauss, d};
}

FieldKind FieldKind::kdv() { return {Family::KdVGauss, DepthParam::shallow()}; }

double FieldKind::symbol(std::int64_t n) const {
    switch (family) {
        case Family::DeepGauss: return k_delta(depth, n);
        case Family::ScaledGauss: return l_delta(depth, n);
        case Family::KdVGauss: return static_cast<double>(n) * static_cast<double>(n);
    }
    return 0.0;
}

std::string FieldKind::str() const {
    switch (family) {
        case Family::DeepGauss: return "deep(delta=" + depth.str() + ")";
        case Family::ScaledGauss: return "scaled(delta=" + depth.str() + ")";
        case Family::KdVGauss: return "kdv";
    }
    return {};
}

SpectralField sample_field_with(const FieldKind& kind, int cutoff,
                                const std::function<std::complex<double>(std::int64_t)>& g) {
    if (cutoff < 1) throw std::domain_error("sample_field: cutoff >= 1 required");
    Eigen::ArrayXcd c(cutoff);
    if (kind.family == FieldKind::Family::ScaledGauss) {
        // scale the deep draw itself so the coupling X~ = sqrt(delta/3) X
        // holds to the last bit
        const FieldKind deep = FieldKind::deep(kind.depth);
        const double scale = std::sqrt(kind.depth.delta() / 3.0);
        for (int n = 1; n <= cutoff; ++n)
            c(n - 1) = scale * (g(n) / std::sqrt(deep.symbol(n)));
        return SpectralField(cutoff, std::move(c));
    }
    for (int n = 1; n <= cutoff; ++n) c(n - 1) = g(n) / std::sqrt(kind.symbol(n));
    return SpectralField(cutoff, std::move(c));
}

SpectralField sample_field(const FieldKind& kind, int cutoff, const GaussianStream& gauss) {
    return sample_field_with(kind, cutoff,
                             [&gauss](std::int64_t n) { return gauss.mode_gaussian(n); });
}

double sobolev_norm(const SpectralField& f, double s) {
    long double acc = 0.0L;
    for (int n = 1; n <= f.cutoff; ++n) {
        const double w = std::pow(1.0 + static_cast<double>(n) * n, s);
        acc += w * std::norm(f.coeffs(n - 1));
    }
    return std::sqrt(static_cast<double>(acc) / kPi);
}

double eval_at(const SpectralField& f, double x) {
    std::complex<double> acc(0.0, 0.0);
    for (int n = 1; n <= f.cutoff; ++n)
        acc += f.coeffs(n - 1) * std::polar(1.0, n * x);
    return acc.real() / kPi;
}

SpectralField project(const SpectralField& f, int M) {
    if (M < 0) throw std::domain_error("project: negative cutoff");
    if (M >= f.cutoff) return f;
    return SpectralField(M, f.coeffs.head(M));
}

namespace {

// Shared cos/sin tables for the uniform grids, keyed by (N, M) and laid
// out [j][n] so both transform kernels stream contiguously.
struct TrigTable {
    int N = 0, M = 0;
    std::vector<double> c, s; // size M*N, entry (j, n) at j*N + (n-1)
};

const TrigTable& trig_table(int N, int M) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<TrigTable>> cache;
    std::lock_guard<std::mutex> lk(mtx);
    auto& slot = cache[{N, M}];
    if (!slot) {
        auto t = std::make_unique<TrigTable>();
        t->N = N;
        t->M = M;
        t->c.resize(static_cast<std::size_t>(M) * N);
        t->s.resize(static_cast<std::size_t>(M) * N);
        for (int j = 0; j < M; ++j)
            for (int n = 1; n <= N; ++n) {
                const double x = 2.0 * kPi * j * n / M;
                t->c[static_cast<std::size_t>(j) * N + n - 1] = std::cos(x);
                t->s[static_cast<std::size_t>(j) * N + n - 1] = std::sin(x);
            }
        slot = std::move(t);
    }
    return *slot;
}

} // namespace

void to_physical_into(const Eigen::ArrayXcd& coeffs, int gridsize, Eigen::ArrayXd& out) {
    const int N = static_cast<int>(coeffs.size());
    const TrigTable& t = trig_table(N, gridsize);
    // f(x_j) = (1/pi) sum_n (Re u^ cos(n x_j) - Im u^ sin(n x_j))
    for (int j = 0; j < gridsize; ++j) {
        const double* cj = t.c.data() + static_cast<std::size_t>(j) * N;
        const double* sj = t.s.data() + static_cast<std::size_t>(j) * N;
        double acc = 0.0;
        for (int i = 0; i < N; ++i)
            acc += coeffs(i).real() * cj[i] - coeffs(i).imag() * sj[i];
        out(j) = acc / kPi;
    }
}

void from_physical_into(const Eigen::ArrayXd& grid, int N, Eigen::ArrayXcd& out) {
    const int M = static_cast<int>(grid.size());
    const TrigTable& t = trig_table(N, M);
    out.setZero();
    for (int j = 0; j < M; ++j) {
        const double* cj = t.c.data() + static_cast<std::size_t>(j) * N;
        const double* sj = t.s.data() + static_cast<std::size_t>(j) * N;
        const double fj = grid(j);
        for (int i = 0; i < N; ++i)
            out(i) += std::complex<double>(fj * cj[i], -fj * sj[i]);
    }
    out *= 2.0 * kPi / M; // quadrature weight for u^(n) = int f e^{-inx} dx
}

Eigen::ArrayXd to_physical(const SpectralField& f, int gridsize) {
    if (gridsize < 1) throw std::domain_error("to_physical: empty grid");
    Eigen::ArrayXd out(gridsize);
    to_physical_into(f.coeffs, gridsize, out);
    return out;
}

SpectralField from_physical(const Eigen::ArrayXd& grid, int N) {
    const int M = static_cast<int>(grid.size());
    if (M < 2 * N + 1)
        throw aliasing_error("from_physical: grid of size " + std::to_string(M) +
                             " cannot resolve modes up to " + std::to_string(N));
    Eigen::ArrayXcd c(N);
    from_physical_into(grid, N, c);
    return SpectralField(N, std::move(c));
}

MeanSE deep_limit_gap(const DepthParam& depth, int cutoff, int samples, double eps,
                      std::uint64_t seed) {
    if (samples < 1) throw std::domain_error("deep_limit_gap: samples >= 1 required");
    const FieldKind kd = FieldKind::deep(depth);
    const FieldKind kbo = FieldKind::deep(DepthParam::infinite());
    std::vector<double> sq(samples);
    parallel_for(samples, [&](std::size_t i) {
        GaussianStream gs(seed, i);
        const SpectralField a = sample_field(kd, cutoff, gs);
        const SpectralField b = sample_field(kbo, cutoff, gs);
        const double g = sobolev_norm(a - b, -eps);
        sq[i] = g * g;
    });
    const MeanSE m = mean_se(sq);
    const double gap = std::sqrt(m.mean);
    return {gap, gap > 0.0 ? m.se / (2.0 * gap) : m.se};
}

} // namespace ilw
