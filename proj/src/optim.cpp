#include "graphevt/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace graphevt {
namespace {

struct Run {
    std::vector<double> x;
    double value;
    int iterations;
    bool converged;
};

Run simplex_search(const std::function<double(std::span<const double>)>& f,
                   const std::vector<double>& start, const std::vector<double>& steps,
                   const NelderMeadOptions& opts) {
    const std::size_t d = start.size();
    std::vector<std::vector<double>> pts(d + 1, start);
    std::vector<double> vals(d + 1);
    for (std::size_t i = 0; i < d; ++i)
        pts[i + 1][i] += steps[i];
    for (std::size_t i = 0; i <= d; ++i)
        vals[i] = f(pts[i]);

    auto sanitize = [](double v) {
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };
    for (double& v : vals)
        v = sanitize(v);

    std::vector<std::size_t> order(d + 1);
    std::vector<double> centroid(d), trial(d), trial2(d);
    auto point = [&](double coef, const std::vector<double>& worst, std::vector<double>& out) {
        for (std::size_t j = 0; j < d; ++j)
            out[j] = centroid[j] + coef * (worst[j] - centroid[j]);
        return sanitize(f(out));
    };

    int it = 0;
    bool converged = false;
    for (; it < opts.max_iterations; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order.front(), worst = order.back(),
                          second = order[d > 0 ? d - 1 : 0];
        if (std::isfinite(vals[worst]) &&
            vals[worst] - vals[best] <= opts.tolerance * (1.0 + std::abs(vals[best]))) {
            converged = true;
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == worst)
                continue;
            for (std::size_t j = 0; j < d; ++j)
                centroid[j] += pts[i][j];
        }
        for (double& c : centroid)
            c /= static_cast<double>(d);

        const double fr = point(-1.0, pts[worst], trial);
        if (fr < vals[best]) {
            const double fe = point(-2.0, pts[worst], trial2);
            if (fe < fr) {
                pts[worst] = trial2;
                vals[worst] = fe;
            } else {
                pts[worst] = trial;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = trial;
            vals[worst] = fr;
            continue;
        }
        // Contraction: outside if the reflection beat the worst, else inside.
        const bool outside = fr < vals[worst];
        const double fc = point(outside ? -0.5 : 0.5, pts[worst], trial2);
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = trial2;
            vals[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == best)
                continue;
            for (std::size_t j = 0; j < d; ++j)
                pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
            vals[i] = sanitize(f(pts[i]));
        }
    }
    const auto best = static_cast<std::size_t>(
        std::min_element(vals.begin(), vals.end()) - vals.begin());
    return {pts[best], vals[best], it, converged};
}

} // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, std::vector<double> steps,
                             const NelderMeadOptions& opts) {
    NelderMeadResult result;
    if (start.empty()) {
        result.value = objective(start);
        result.converged = true;
        return result;
    }
    Run run = simplex_search(objective, start, steps, opts);
    result.iterations = run.iterations;
    for (int r = 0; r < opts.max_restarts && std::isfinite(run.value); ++r) {
        Run again = simplex_search(objective, run.x, steps, opts);
        result.iterations += again.iterations;
        const double gain = run.value - again.value;
        if (again.value < run.value)
            run = std::move(again);
        else
            run.converged = run.converged && again.converged;
        if (gain < opts.tolerance * (1.0 + std::abs(run.value)))
            break;
    }
    result.x = std::move(run.x);
    result.value = run.value;
    result.converged = run.converged;
    return result;
}

} // namespace graphevt
