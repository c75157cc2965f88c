#include "graphevt/residual_space.hpp"

#include "graphevt/rng.hpp"
#include "graphevt/simd/kernels.hpp"
#include "graphevt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphevt {

TrimmedMoments trimmed_moments(std::span<const double> column) {
    if (column.empty())
        return {};
    std::vector<double> sorted(column.begin(), column.end());
    std::sort(sorted.begin(), sorted.end());
    const double lo = percentile_sorted(sorted, 2.5);
    const double hi = percentile_sorted(sorted, 97.5);
    std::vector<double> kept;
    kept.reserve(sorted.size());
    for (double v : sorted)
        if (v >= lo && v <= hi)
            kept.push_back(v);
    if (kept.size() < 2)
        return {mean(column), 0.0};
    return {mean(kept), sample_std(kept)};
}

ScaledResiduals scale_residuals(const Matrix& residuals) {
    ScaledResiduals out{Matrix(residuals.rows(), residuals.cols()),
                        std::vector<double>(residuals.cols()),
                        std::vector<double>(residuals.cols())};
    for (std::size_t c = 0; c < residuals.cols(); ++c) {
        const auto col = residuals.column(c);
        const TrimmedMoments m = trimmed_moments(col);
        out.center[c] = m.mean;
        out.scale[c] = m.std;
        if (m.std < kMinScale)
            continue;
        for (std::size_t r = 0; r < residuals.rows(); ++r)
            out.y(r, c) = (col[r] - m.mean) / m.std;
    }
    return out;
}

double projection_scale(const Matrix& centered, std::span<const double> direction) {
    std::vector<double> proj(centered.rows());
    simd::kernels().gemv(centered.data().data(), centered.rows(), centered.cols(),
                         direction.data(), proj.data());
    return kMadScale * mad(proj);
}

namespace {

double norm(std::span<const double> v) {
    return std::sqrt(simd::dot(v, v));
}

// Normalises v in place; false when it is (numerically) zero.
bool normalise(std::vector<double>& v) {
    const double len = norm(v);
    if (!(len > 1e-12))
        return false;
    for (double& x : v)
        x /= len;
    return true;
}

void remove_component(std::vector<double>& v, std::span<const double> unit) {
    const double c = simd::dot(v, unit);
    simd::axpy(-c, unit, v);
}

// Argmax of projection_scale over candidates; lowest index wins ties.
std::vector<double> best_direction(const Matrix& data,
                                   const std::vector<std::vector<double>>& candidates) {
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double s = projection_scale(data, candidates[i]);
        if (s > best) {
            best = s;
            arg = i;
        }
    }
    return candidates[arg];
}

} // namespace

Embedding2D robust_pca_2d(const Matrix& y, const RobustPcaOptions& opts) {
    const std::size_t T = y.rows(), D = y.cols();
    if (T < 5)
        throw std::invalid_argument("robust PCA needs at least 5 rows");
    if (D < 2)
        throw std::invalid_argument("robust PCA needs at least 2 columns");

    Embedding2D out;
    out.center.resize(D);
    for (std::size_t c = 0; c < D; ++c)
        out.center[c] = median(y.column(c));
    Matrix x(T, D);
    for (std::size_t r = 0; r < T; ++r)
        for (std::size_t c = 0; c < D; ++c)
            x(r, c) = y(r, c) - out.center[c];

    Rng rng(opts.seed);
    std::vector<std::vector<double>> random_dirs;
    random_dirs.reserve(opts.random_directions);
    while (random_dirs.size() < opts.random_directions) {
        std::vector<double> v(D);
        for (double& e : v)
            e = rng.normal();
        if (normalise(v))
            random_dirs.push_back(std::move(v));
    }

    std::vector<std::vector<double>> candidates;
    candidates.reserve(T + random_dirs.size());
    for (std::size_t r = 0; r < T; ++r) {
        std::vector<double> v(x.row(r).begin(), x.row(r).end());
        if (normalise(v))
            candidates.push_back(std::move(v));
    }
    const bool degenerate = candidates.empty();
    candidates.insert(candidates.end(), random_dirs.begin(), random_dirs.end());

    if (degenerate) {
        out.first.assign(D, 0.0);
        out.second.assign(D, 0.0);
        out.first[0] = 1.0;
        out.second[1] = 1.0;
        out.z = Matrix(T, 2);
        return out;
    }

    out.first = best_direction(x, candidates);

    Matrix deflated = x;
    for (std::size_t r = 0; r < T; ++r) {
        const double c = simd::dot(deflated.row(r), out.first);
        simd::axpy(-c, out.first, deflated.row(r));
    }
    candidates.clear();
    for (std::size_t r = 0; r < T; ++r) {
        std::vector<double> v(deflated.row(r).begin(), deflated.row(r).end());
        if (normalise(v))
            candidates.push_back(std::move(v));
    }
    for (auto v : random_dirs) {
        remove_component(v, out.first);
        if (normalise(v))
            candidates.push_back(std::move(v));
    }
    out.second = best_direction(deflated, candidates);
    // Re-orthogonalise against rounding.
    remove_component(out.second, out.first);
    normalise(out.second);

    out.z = Matrix(T, 2);
    for (std::size_t r = 0; r < T; ++r) {
        out.z(r, 0) = simd::dot(x.row(r), out.first);
        out.z(r, 1) = simd::dot(x.row(r), out.second);
    }
    return out;
}

} // namespace graphevt
