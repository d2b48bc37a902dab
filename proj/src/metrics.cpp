#include "ilw/metrics.hpp"

#include <cmath>
#include <limits>

#include "ilw/dispersion.hpp"
#include "ilw/errors.hpp"

namespace ilw {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ProductGaussianSpec ProductGaussianSpec::from_kind(const FieldKind& kind, int modes) {
    if (modes < 1) throw std::domain_error("ProductGaussianSpec: modes >= 1 required");
    Eigen::ArrayXd v(modes);
    for (int n = 1; n <= modes; ++n) v(n - 1) = kPi / kind.symbol(n);
    return {std::move(v), kind.str()};
}

double hellinger_product(const ProductGaussianSpec& a, const ProductGaussianSpec& b) {
    if (a.modes() != b.modes())
        throw std::invalid_argument("hellinger_product: mode counts differ");
    long double log_h = 0.0L;
    for (int i = 0; i < a.modes(); ++i) {
        const double an = a.var(i), bn = b.var(i);
        if (!(an > 0.0) || !(bn > 0.0))
            throw std::domain_error("hellinger_product: variances must be positive");
        // per +-n pair: f^2 = 2 sqrt(a b) / (a + b)
        log_h += std::log(2.0 * std::sqrt(an * bn) / (an + bn));
    }
    return static_cast<double>(std::exp(log_h)); // underflows to 0 when wildly mismatched
}

double hellinger_distance(const ProductGaussianSpec& a, const ProductGaussianSpec& b) {
    return std::sqrt(std::max(0.0, 1.0 - hellinger_product(a, b)));
}

KlResult kl_deep(const DepthParam& depth, int modes) {
    if (modes < 1) throw std::domain_error("kl_deep: modes >= 1 required");
    if (depth.is_shallow()) throw family_error("kl_deep compares the deep family to gBO");
    long double s = 0.0L;
    for (int n = modes; n >= 1; --n) {
        const double K = k_delta(depth, n);
        const double t = static_cast<double>(n) / K;
        s += static_cast<long double>(t - 1.0) - std::log1p(t - 1.0);
    }
    KlResult r;
    r.kl = static_cast<double>(s);
    if (depth.is_finite()) {
        // phi(t) <= (t-1)^2 = ((n-K)/K)^2 <= (1/delta)^2 / K^2 and
        // K(n) >= n - 1/delta, so the tail is below (1/delta^2) / (M - 1/delta).
        const double d = depth.delta();
        const double den = static_cast<double>(modes) - 1.0 / d;
        r.tail_bound = den > 0.0 ? 1.0 / (d * d * den) : std::numeric_limits<double>::infinity();
    }
    return r;
}

PinskerResult pinsker_check(const DepthParam& depth, int modes) {
    const auto a = ProductGaussianSpec::from_kind(FieldKind::deep(depth), modes);
    const auto b = ProductGaussianSpec::from_kind(FieldKind::deep(DepthParam::infinite()), modes);
    PinskerResult r;
    r.hellinger = hellinger_distance(a, b);
    r.pinsker_rhs = std::sqrt(kl_deep(depth, modes).kl / 2.0);
    r.ordered = r.hellinger <= r.pinsker_rhs;
    return r;
}

double kakutani_sum(const ProductGaussianSpec& a, const ProductGaussianSpec& b, int modes) {
    if (a.modes() < modes || b.modes() < modes)
        throw std::invalid_argument("kakutani_sum: specs shorter than requested mode count");
    long double s = 0.0L;
    for (int i = 0; i < modes; ++i) {
        const double r = a.var(i) / b.var(i) - 1.0;
        s += static_cast<long double>(r) * r;
    }
    return static_cast<double>(s);
}

MeanSE scheffe_tv(const std::vector<double>& f, const std::vector<double>& g) {
    if (f.size() != g.size() || f.empty())
        throw std::invalid_argument("scheffe_tv: mismatched density samples");
    const double zf = pairwise_sum(f) / f.size();
    const double zg = pairwise_sum(g) / g.size();
    if (!(zf > 0.0) || !(zg > 0.0))
        throw ensemble_error("scheffe_tv: degenerate normalizer");
    std::vector<double> h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = 0.5 * std::abs(f[i] / zf - g[i] / zg);
    return mean_se(h);
}

MeanSE ky_fan(const std::vector<SpectralField>& a, const std::vector<SpectralField>& b,
              double s) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("ky_fan: unpaired inputs");
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        d[i] = std::min(1.0, sobolev_norm(a[i] - b[i], s));
    return mean_se(d);
}

namespace {
Eigen::MatrixXd marginal_points(const std::vector<SpectralField>& fields,
                                const std::vector<int>& modes) {
    Eigen::MatrixXd pts(fields.size(), 2 * modes.size());
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t m = 0; m < modes.size(); ++m) {
            const std::complex<double> c = fields[i].coeff(modes[m]);
            pts(i, 2 * m) = c.real();
            pts(i, 2 * m + 1) = c.imag();
        }
    return pts;
}

double cross_mean_distance(const Eigen::MatrixXd& pa, const Eigen::ArrayXd& wa,
                           const Eigen::MatrixXd& pb, const Eigen::ArrayXd& wb) {
    long double s = 0.0L;
    for (Eigen::Index i = 0; i < pa.rows(); ++i) {
        long double row = 0.0L;
        for (Eigen::Index j = 0; j < pb.rows(); ++j)
            row += wb(j) * (pa.row(i) - pb.row(j)).norm();
        s += wa(i) * row;
    }
    return static_cast<double>(s);
}
} // namespace

double deep_rn_density(const SpectralField& u, const DepthParam& depth, int modes) {
    if (modes > u.cutoff)
        throw std::invalid_argument("deep_rn_density: field carries fewer modes");
    long double log_rn = 0.0L;
    for (int n = 1; n <= modes; ++n) {
        const double K = k_delta(depth, n);
        log_rn += std::log(K / n) + (n - K) * std::norm(u.coeffs(n - 1)) / (2.0 * kPi);
    }
    return static_cast<double>(std::exp(log_rn));
}

double weak_marginal_distance(const std::vector<SpectralField>& a, const Eigen::ArrayXd& wa,
                              const std::vector<SpectralField>& b, const Eigen::ArrayXd& wb,
                              const std::vector<int>& modes) {
    if (modes.empty() || modes.size() > 4)
        throw std::invalid_argument("weak_marginal_distance: 1..4 modes supported");
    if (wa.size() != static_cast<Eigen::Index>(a.size()) ||
        wb.size() != static_cast<Eigen::Index>(b.size()))
        throw std::invalid_argument("weak_marginal_distance: weight/sample mismatch");
    const Eigen::MatrixXd pa = marginal_points(a, modes);
    const Eigen::MatrixXd pb = marginal_points(b, modes);
    const double ab = cross_mean_distance(pa, wa, pb, wb);
    const double aa = cross_mean_distance(pa, wa, pa, wa);
    const double bb = cross_mean_distance(pb, wb, pb, wb);
    return std::sqrt(std::max(0.0, 2.0 * ab - aa - bb));
}

} // namespace ilw
