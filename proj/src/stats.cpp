#include "graphevt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphevt {

double percentile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty())
        return 0.0;
    q = std::clamp(q, 0.0, 100.0);
    const double m = static_cast<double>(sorted.size());
    const double h = 1.0 + (m - 1.0) * q / 100.0;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = static_cast<std::size_t>(std::ceil(h));
    const double frac = h - std::floor(h);
    const double a = sorted[lo - 1];
    const double b = sorted[std::min(hi, sorted.size()) - 1];
    return a + frac * (b - a);
}

double percentile(std::span<const double> values, double q) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return percentile_sorted(sorted, q);
}

double median(std::span<const double> values) { return percentile(values, 50.0); }

double mad(std::span<const double> values) {
    if (values.empty())
        return 0.0;
    const double med = median(values);
    std::vector<double> dev(values.size());
    std::transform(values.begin(), values.end(), dev.begin(),
                   [med](double v) { return std::abs(v - med); });
    return median(dev);
}

double mean(std::span<const double> values) {
    if (values.empty())
        return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

double sample_std(std::span<const double> values) {
    if (values.size() < 2)
        return 0.0;
    const double mu = mean(values);
    double ss = 0.0;
    for (double v : values)
        ss += (v - mu) * (v - mu);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

} // namespace graphevt
