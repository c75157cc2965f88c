#pragma once

#include <span>
#include <vector>

namespace graphevt {

/// Linear-interpolation percentile on 1-indexed ranks: after sorting,
/// rank h = 1 + (m - 1) * q / 100 and the result interpolates between the
/// values at floor(h) and ceil(h). q is clamped to [0, 100].
/// An empty input yields 0.
double percentile(std::span<const double> values, double q);

/// Same convention on data that is already sorted ascending.
double percentile_sorted(std::span<const double> sorted, double q);

double median(std::span<const double> values);

/// Median absolute deviation from the median (unscaled).
double mad(std::span<const double> values);

double mean(std::span<const double> values);

/// Sample standard deviation (denominator m - 1); 0 for fewer than two values.
double sample_std(std::span<const double> values);

} // namespace graphevt
