#include "graphevt/arima.hpp"

#include "graphevt/optim.hpp"
#include "graphevt/parallel.hpp"
#include "graphevt/stats.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace graphevt {
namespace {

constexpr double kRootRadius = 1.001;
constexpr double kSigma2Floor = 1e-300;
constexpr double kDiffReduction = 0.95;

struct Params {
    double mean;
    std::span<const double> ar;
    std::span<const double> ma;
};

// Innovations e_t of the differenced series under the conditional recursion.
// Returns the sum of squares.
double innovations(std::span<const double> w, double presample, const Params& prm,
                   std::vector<double>& e) {
    const std::size_t n = w.size();
    e.assign(n, 0.0);
    double css = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        double pred = prm.mean;
        for (std::size_t i = 0; i < prm.ar.size(); ++i) {
            const double lagged = t > i ? w[t - 1 - i] : presample;
            pred += prm.ar[i] * (lagged - prm.mean);
        }
        for (std::size_t j = 0; j < prm.ma.size() && j < t; ++j)
            pred += prm.ma[j] * e[t - 1 - j];
        e[t] = w[t] - pred;
        css += e[t] * e[t];
    }
    return css;
}

double loglik_from_css(double css, std::size_t n) {
    const double nd = static_cast<double>(n);
    const double sigma2 = std::max(css / nd, kSigma2Floor);
    return -0.5 * nd * (std::log(2.0 * std::numbers::pi * sigma2) + 1.0);
}

bool admissible(std::span<const double> ar, std::span<const double> ma) {
    std::vector<double> neg(ma.size());
    std::transform(ma.begin(), ma.end(), neg.begin(), [](double v) { return -v; });
    return roots_outside(ar, kRootRadius) && roots_outside(neg, kRootRadius);
}

// Least-squares AR(p) coefficients with intercept, used as a start point.
std::vector<double> ols_ar(std::span<const double> w, int p) {
    const std::size_t n = w.size();
    const std::size_t rows = n - static_cast<std::size_t>(p);
    Eigen::MatrixXd X(rows, p + 1);
    Eigen::VectorXd y(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t t = r + static_cast<std::size_t>(p);
        X(r, 0) = 1.0;
        for (int i = 0; i < p; ++i)
            X(r, i + 1) = w[t - 1 - i];
        y(r) = w[t];
    }
    const Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
    std::vector<double> ar(p);
    for (int i = 0; i < p; ++i)
        ar[i] = std::isfinite(beta(i + 1)) ? beta(i + 1) : 0.0;
    // Pull a non-stationary estimate back inside the admissible region.
    for (int shrink = 0; shrink < 50 && !roots_outside(ar, kRootRadius); ++shrink)
        for (double& a : ar)
            a *= 0.9;
    return ar;
}

void finish(ArimaModel& m, double css) {
    m.sigma2 = css / static_cast<double>(m.n_effective);
    m.loglik = loglik_from_css(css, m.n_effective);
    m.aicc = aicc(m.loglik, m.order, m.n_effective);
    double sum_ar = 0.0;
    for (double a : m.ar)
        sum_ar += a;
    m.intercept = m.mean * (1.0 - sum_ar);
}

ArimaModel mean_model(std::span<const double> w, int d) {
    ArimaModel m;
    m.order = {0, d, 0};
    m.n_effective = w.size();
    m.mean = graphevt::mean(w);
    double css = 0.0;
    for (double v : w)
        css += (v - m.mean) * (v - m.mean);
    finish(m, css);
    return m;
}

} // namespace

std::vector<double> difference(std::span<const double> series, int d) {
    if (d < 0 || d > kMaxDiff)
        throw std::invalid_argument("differencing order must be 0, 1 or 2");
    if (series.size() <= static_cast<std::size_t>(d))
        throw std::invalid_argument("series too short to difference");
    std::vector<double> out(series.begin(), series.end());
    for (int k = 0; k < d; ++k) {
        for (std::size_t i = 0; i + 1 < out.size(); ++i)
            out[i] = out[i + 1] - out[i];
        out.pop_back();
    }
    return out;
}

bool roots_outside(std::span<const double> coeffs, double radius) {
    // Step-down (Schur-Cohn) recursion on the rescaled polynomial
    // 1 - sum b_j z^j, b_j = coeffs[j-1] * radius^j: all roots lie outside
    // the unit circle iff every reflection coefficient has modulus < 1.
    std::vector<double> b(coeffs.size());
    double scale = 1.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        scale *= radius;
        b[j] = coeffs[j] * scale;
    }
    for (std::size_t k = b.size(); k > 0; --k) {
        const double kappa = b[k - 1];
        if (!(std::abs(kappa) < 1.0))
            return false;
        const double denom = 1.0 - kappa * kappa;
        std::vector<double> next(k - 1);
        for (std::size_t j = 0; j + 1 < k; ++j)
            next[j] = (b[j] + kappa * b[k - 2 - j]) / denom;
        b = std::move(next);
    }
    return true;
}

double aicc(double loglik, ArimaOrder order, std::size_t n_effective) {
    const double k = order.p + order.q + 2;
    const double n = static_cast<double>(n_effective);
    if (n - k - 1.0 <= 0.0)
        return std::numeric_limits<double>::infinity();
    return -2.0 * loglik + 2.0 * k + 2.0 * k * (k + 1.0) / (n - k - 1.0);
}

ArimaModel fit_arima(std::span<const double> series, ArimaOrder order) {
    if (order.p < 0 || order.p > kMaxAr || order.q < 0 || order.q > kMaxMa)
        throw std::invalid_argument("ARIMA orders must satisfy 0 <= p, q <= 3");
    const std::size_t need =
        static_cast<std::size_t>(order.d + std::max(order.p, order.q) + 5);
    if (series.size() < need)
        throw std::invalid_argument("series too short for the requested ARIMA order");

    const std::vector<double> w = difference(series, order.d);
    if (order.p == 0 && order.q == 0)
        return mean_model(w, order.d);

    const double wbar = graphevt::mean(w);
    const double wsd = sample_std(w);
    const std::size_t p = order.p, q = order.q;
    std::vector<double> e;
    auto objective = [&](std::span<const double> x) {
        const auto ar = x.subspan(1, p);
        const auto ma = x.subspan(1 + p, q);
        if (!admissible(ar, ma))
            return std::numeric_limits<double>::infinity();
        const double css = innovations(w, wbar, {x[0], ar, ma}, e);
        return -loglik_from_css(css, w.size());
    };

    std::vector<double> steps(1 + p + q, 0.1);
    steps[0] = wsd > 0.0 ? 0.1 * wsd : 0.1 * (1.0 + std::abs(wbar));
    NelderMeadOptions opts;
    opts.max_iterations = 500;
    opts.tolerance = 1e-8;
    opts.max_restarts = 1;

    std::vector<double> start(1 + p + q, 0.0);
    start[0] = wbar;
    NelderMeadResult best = nelder_mead(objective, start, steps, opts);
    if (p > 0) {
        const auto ar0 = ols_ar(w, order.p);
        std::copy(ar0.begin(), ar0.end(), start.begin() + 1);
        NelderMeadResult alt = nelder_mead(objective, start, steps, opts);
        if (alt.value < best.value)
            best = std::move(alt);
    }
    if (!std::isfinite(best.value)) {
        ArimaModel m = mean_model(w, order.d);
        m.fallback = true;
        return m;
    }

    ArimaModel m;
    m.order = order;
    m.n_effective = w.size();
    m.mean = best.x[0];
    m.ar.assign(best.x.begin() + 1, best.x.begin() + 1 + static_cast<std::ptrdiff_t>(p));
    m.ma.assign(best.x.begin() + 1 + static_cast<std::ptrdiff_t>(p), best.x.end());
    const double css = innovations(w, wbar, {m.mean, m.ar, m.ma}, e);
    finish(m, css);
    return m;
}

double conditional_loglik(const ArimaModel& model, std::span<const double> series) {
    const std::vector<double> w = difference(series, model.order.d);
    std::vector<double> e;
    const double css = innovations(w, graphevt::mean(w), {model.mean, model.ar, model.ma}, e);
    return loglik_from_css(css, w.size());
}

int select_differencing(std::span<const double> series) {
    double prev = sample_std(series);
    for (int d = 0; d < kMaxDiff; ++d) {
        if (series.size() <= static_cast<std::size_t>(d + 2))
            return d;
        const double next = sample_std(difference(series, d + 1));
        if (next >= kDiffReduction * prev)
            return d;
        prev = next;
    }
    return kMaxDiff;
}

namespace {

bool near_constant(std::span<const double> series) {
    return sample_std(series) <= 1e-12 * (1.0 + std::abs(graphevt::mean(series)));
}

} // namespace

ArimaOrder select_order(std::span<const double> series) {
    if (series.size() < 2 || near_constant(series))
        return {};
    const int d = select_differencing(series);
    ArimaOrder best{0, d, 0};
    double best_aicc = std::numeric_limits<double>::infinity();
    bool have = false;
    // Visiting by increasing p+q, then p, makes strict '<' implement the tie rule.
    for (int total = 0; total <= kMaxAr + kMaxMa; ++total) {
        for (int p = 0; p <= kMaxAr; ++p) {
            const int q = total - p;
            if (q < 0 || q > kMaxMa)
                continue;
            const ArimaOrder cand{p, d, q};
            if (series.size() < static_cast<std::size_t>(d + std::max(p, q) + 5))
                continue;
            const double score = fit_arima(series, cand).aicc;
            if (!have || score < best_aicc) {
                best = cand;
                best_aicc = score;
                have = true;
            }
        }
    }
    return best;
}

std::vector<double> one_step_residuals(const ArimaModel& model, std::span<const double> series) {
    std::vector<double> out(series.size(), 0.0);
    const std::size_t d = static_cast<std::size_t>(model.order.d);
    if (series.size() <= d)
        return out;
    const std::vector<double> w = difference(series, model.order.d);
    std::vector<double> e;
    innovations(w, graphevt::mean(w), {model.mean, model.ar, model.ma}, e);
    const std::size_t warmup = d + static_cast<std::size_t>(std::max(model.order.p, model.order.q));
    for (std::size_t t = warmup; t < series.size(); ++t)
        out[t] = e[t - d];
    return out;
}

ResidualFit residual_matrix(const Matrix& features, unsigned workers) {
    ResidualFit out{Matrix(features.rows(), features.cols()),
                    std::vector<ArimaModel>(features.cols())};
    parallel_for(features.cols(), workers, [&](std::size_t c) {
        const std::vector<double> col = features.column(c);
        if (near_constant(col)) {
            out.models[c].n_effective = col.size();
            return;
        }
        const ArimaModel model = fit_arima(col, select_order(col));
        out.residuals.set_column(c, one_step_residuals(model, col));
        out.models[c] = model;
    });
    return out;
}

} // namespace graphevt
