#pragma once

#include "graphevt/matrix.hpp"

#include <span>
#include <vector>

namespace graphevt {

/// Product-Gaussian KDE evaluated at each row of the T x 2 matrix `z`,
/// using all rows (self included). Per-axis bandwidth
/// h = 1.06 * max(std, 1e-6) * T^(-1/6); densities are floored at 1e-300.
std::vector<double> kde2d_at_points(const Matrix& z);

/// |ln d| per entry.
std::vector<double> abs_log_density(std::span<const double> densities);

struct GpdFit {
    double sigma_u = 0.0;
    double xi = 0.0;
    double u = 0.0;
    std::size_t k = 0;
    bool exponential_limit = false;
    /// No exceedances: nothing can be scored.
    bool degenerate = false;
    /// Log-likelihood at the returned parameters (exponential form when
    /// exponential_limit is set).
    double loglik = 0.0;
};

inline constexpr std::size_t kMinExceedances = 5;
inline constexpr double kXiZero = 1e-4;
/// Lower bound on the shape. Below -0.5 the fitted endpoint -sigma/xi
/// collapses onto the largest exceedance.
inline constexpr double kMinXi = -0.5;

/// GPD log-likelihood of exceedances w; -inf outside the support or for
/// sigma <= 0. xi == 0 uses the exponential form.
double gpd_loglik(std::span<const double> w, double sigma, double xi);

/// Maximum-likelihood fit to exceedances w (all > 0), started from
/// probability-weighted moments and constrained to xi > kMinXi. Falls back to
/// the exponential MLE sigma = mean(w) when k < 5 or |xi| < 1e-4. The
/// returned u is 0 and k = w.size().
GpdFit fit_gpd_exceedances(std::span<const double> w);

/// Peaks over the threshold u = percentile(v, threshold_percentile);
/// exceedances are v_i - u for v_i > u.
GpdFit fit_gpd(std::span<const double> v, double threshold_percentile = 90.0);

/// 1 - H(w) for w >= 0.
double gpd_survival(const GpdFit& fit, double w);

/// Estimated P(V >= v_i): (k/T) * gpd_survival(v_i - u) above u, the
/// empirical survival fraction otherwise.
std::vector<double> exceedance_probabilities(std::span<const double> v, const GpdFit& fit);

/// 1 - P(V >= v_i), clipped to [0, 1]; all zero for a degenerate fit.
std::vector<double> anomaly_scores(std::span<const double> v, const GpdFit& fit);

/// 1 - S(v_i - u) for v_i > u, the tail score conditional on exceeding the
/// threshold; 0 at or below u and for a degenerate fit.
std::vector<double> tail_scores(std::span<const double> v, const GpdFit& fit);

/// flagged[i] iff scores[i] > threshold.
std::vector<bool> classify(std::span<const double> scores, double threshold = 0.95);

} // namespace graphevt
