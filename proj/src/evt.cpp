#include "graphevt/evt.hpp"

#include "graphevt/optim.hpp"
#include "graphevt/simd/kernels.hpp"
#include "graphevt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace graphevt {
namespace {

constexpr double kMinBandwidthStd = 1e-6;
constexpr double kDensityFloor = 1e-300;

} // namespace

std::vector<double> kde2d_at_points(const Matrix& z) {
    const std::size_t T = z.rows();
    const std::vector<double> xs = z.column(0), ys = z.column(1);
    const double shrink = 1.06 * std::pow(static_cast<double>(T), -1.0 / 6.0);
    const double hx = shrink * std::max(sample_std(xs), kMinBandwidthStd);
    const double hy = shrink * std::max(sample_std(ys), kMinBandwidthStd);
    const double norm = 1.0 / (static_cast<double>(T) * 2.0 * std::numbers::pi * hx * hy);

    const auto& kern = simd::kernels();
    std::vector<double> d(T);
    for (std::size_t i = 0; i < T; ++i) {
        const double s = kern.gauss_sum_2d(xs.data(), ys.data(), T, xs[i], ys[i], 1.0 / hx, 1.0 / hy);
        d[i] = std::max(norm * s, kDensityFloor);
    }
    return d;
}

std::vector<double> abs_log_density(std::span<const double> densities) {
    std::vector<double> v(densities.size());
    std::transform(densities.begin(), densities.end(), v.begin(),
                   [](double d) { return std::abs(std::log(d)); });
    return v;
}

double gpd_loglik(std::span<const double> w, double sigma, double xi) {
    constexpr double ninf = -std::numeric_limits<double>::infinity();
    if (!(sigma > 0.0))
        return ninf;
    const double k = static_cast<double>(w.size());
    if (xi == 0.0) {
        double s = 0.0;
        for (double x : w)
            s += x;
        return -k * std::log(sigma) - s / sigma;
    }
    double s = 0.0;
    for (double x : w) {
        const double a = xi * x / sigma;
        if (!(a > -1.0))
            return ninf;
        s += std::log1p(a);
    }
    return -k * std::log(sigma) - (1.0 + 1.0 / xi) * s;
}

namespace {

GpdFit exponential_fit(std::span<const double> w) {
    GpdFit f;
    f.k = w.size();
    f.exponential_limit = true;
    f.sigma_u = mean(w);
    f.loglik = gpd_loglik(w, f.sigma_u, 0.0);
    return f;
}

// Probability-weighted-moment estimates, nudged into the feasible region.
std::pair<double, double> pwm_start(std::span<const double> w) {
    std::vector<double> s(w.begin(), w.end());
    std::sort(s.begin(), s.end());
    const double k = static_cast<double>(s.size());
    const double a0 = mean(s);
    double a1 = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double p = (static_cast<double>(i + 1) - 0.35) / k;
        a1 += (1.0 - p) * s[i];
    }
    a1 /= k;
    const double denom = a0 - 2.0 * a1;
    double sigma = a0, xi = 0.0;
    if (denom > 0.0) {
        xi = 2.0 - a0 / denom;
        sigma = 2.0 * a0 * a1 / denom;
    }
    if (!std::isfinite(xi) || !std::isfinite(sigma) || sigma <= 0.0) {
        sigma = a0;
        xi = 0.0;
    }
    xi = std::clamp(xi, -0.5, 2.0);
    if (xi < 0.0)
        sigma = std::max(sigma, -xi * s.back() * 1.1);
    return {sigma, xi};
}

} // namespace

GpdFit fit_gpd_exceedances(std::span<const double> w) {
    if (w.empty()) {
        GpdFit f;
        f.degenerate = true;
        return f;
    }
    if (w.size() < kMinExceedances)
        return exponential_fit(w);

    const auto [sigma0, xi0] = pwm_start(w);
    auto objective = [&](std::span<const double> x) {
        if (!(x[1] > kMinXi))
            return std::numeric_limits<double>::infinity();
        return -gpd_loglik(w, x[0], x[1]);
    };
    NelderMeadOptions opts;
    opts.max_iterations = 2000;
    opts.tolerance = 1e-14;
    opts.max_restarts = 4;
    const NelderMeadResult r =
        nelder_mead(objective, {sigma0, xi0}, {0.1 * sigma0, 0.05}, opts);

    if (!std::isfinite(r.value) || std::abs(r.x[1]) < kXiZero)
        return exponential_fit(w);
    GpdFit f;
    f.k = w.size();
    f.sigma_u = r.x[0];
    f.xi = r.x[1];
    f.loglik = -r.value;
    return f;
}

GpdFit fit_gpd(std::span<const double> v, double threshold_percentile) {
    const double u = percentile(v, threshold_percentile);
    std::vector<double> w;
    for (double x : v)
        if (x > u)
            w.push_back(x - u);
    GpdFit f = fit_gpd_exceedances(w);
    f.u = u;
    return f;
}

double gpd_survival(const GpdFit& fit, double w) {
    if (w <= 0.0)
        return 1.0;
    if (fit.exponential_limit || fit.xi == 0.0)
        return std::exp(-w / fit.sigma_u);
    const double a = 1.0 + fit.xi * w / fit.sigma_u;
    if (a <= 0.0)
        return 0.0;
    return std::exp(-std::log(a) / fit.xi);
}

std::vector<double> exceedance_probabilities(std::span<const double> v, const GpdFit& fit) {
    const std::size_t T = v.size();
    const double Td = static_cast<double>(T);
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> p(T);
    for (std::size_t i = 0; i < T; ++i) {
        if (v[i] > fit.u) {
            p[i] = static_cast<double>(fit.k) / Td * gpd_survival(fit, v[i] - fit.u);
        } else {
            const auto first = std::lower_bound(sorted.begin(), sorted.end(), v[i]);
            p[i] = static_cast<double>(sorted.end() - first) / Td;
        }
    }
    return p;
}

std::vector<double> anomaly_scores(std::span<const double> v, const GpdFit& fit) {
    std::vector<double> s(v.size(), 0.0);
    if (fit.degenerate)
        return s;
    const std::vector<double> p = exceedance_probabilities(v, fit);
    for (std::size_t i = 0; i < v.size(); ++i)
        s[i] = std::clamp(1.0 - p[i], 0.0, 1.0);
    return s;
}

std::vector<double> tail_scores(std::span<const double> v, const GpdFit& fit) {
    std::vector<double> s(v.size(), 0.0);
    if (fit.degenerate)
        return s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > fit.u)
            s[i] = std::clamp(1.0 - gpd_survival(fit, v[i] - fit.u), 0.0, 1.0);
    return s;
}

std::vector<bool> classify(std::span<const double> scores, double threshold) {
    std::vector<bool> out(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i)
        out[i] = scores[i] > threshold;
    return out;
}

} // namespace graphevt
