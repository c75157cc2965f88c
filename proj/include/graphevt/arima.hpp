#pragma once

#include "graphevt/matrix.hpp"

#include <compare>
#include <span>
#include <vector>

namespace graphevt {

struct ArimaOrder {
    int p = 0;
    int d = 0;
    int q = 0;
    friend auto operator<=>(const ArimaOrder&, const ArimaOrder&) = default;
};

inline constexpr int kMaxAr = 3;
inline constexpr int kMaxMa = 3;
inline constexpr int kMaxDiff = 2;

/// Fitted ARIMA(p,d,q) on the d-times differenced series w:
///   w_t = c + sum_i ar[i] w_{t-1-i} + sum_j ma[j] e_{t-1-j} + e_t
/// Internally the model is parametrised by the process mean, with
/// c = mean * (1 - sum(ar)).
struct ArimaModel {
    ArimaOrder order;
    double intercept = 0.0;
    double mean = 0.0;
    std::vector<double> ar;
    std::vector<double> ma;
    double sigma2 = 0.0;
    double loglik = 0.0;
    double aicc = 0.0;
    std::size_t n_effective = 0;
    /// The optimiser failed and the (0,d,0) mean model was substituted.
    bool fallback = false;
};

/// Iterated first differences; throws std::invalid_argument unless
/// 0 <= d <= 2 and the series is longer than d.
std::vector<double> difference(std::span<const double> series, int d);

/// True when every root of 1 - sum_j coeffs[j] z^(j+1) has modulus > radius.
bool roots_outside(std::span<const double> coeffs, double radius);

/// Conditional-sum-of-squares Gaussian fit. Pre-sample differenced values
/// are set to the differenced-series mean, pre-sample errors to 0. Points
/// whose AR or MA polynomial has a root of modulus <= 1.001 are rejected.
/// Throws std::invalid_argument when the series is shorter than
/// d + max(p,q) + 5.
ArimaModel fit_arima(std::span<const double> series, ArimaOrder order);

/// Re-evaluates the conditional log-likelihood of `model` on `series`.
double conditional_loglik(const ArimaModel& model, std::span<const double> series);

/// -2 loglik + 2k + 2k(k+1)/(N-k-1) with k = p + q + 2; +inf when N <= k + 1.
double aicc(double loglik, ArimaOrder order, std::size_t n_effective);

/// Smallest d in {0,1,2} such that differencing once more does not cut the
/// sample standard deviation by more than 5%.
int select_differencing(std::span<const double> series);

/// Differencing by select_differencing, then (p,q) in [0,3]^2 minimising
/// AICc; ties go to smaller p+q, then smaller p. Near-constant series give
/// (0,0,0).
ArimaOrder select_order(std::span<const double> series);

/// One-step in-sample residuals, full length; the first d + max(p,q)
/// entries are exactly 0.
std::vector<double> one_step_residuals(const ArimaModel& model, std::span<const double> series);

struct ResidualFit {
    Matrix residuals;
    std::vector<ArimaModel> models; // one per column
};

/// Column-wise automatic ARIMA fit and residuals. Constant columns give
/// all-zero residuals and an all-zero (0,0,0) model.
ResidualFit residual_matrix(const Matrix& features, unsigned workers = 1);

} // namespace graphevt
