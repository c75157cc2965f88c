#pragma once

#include <span>
#include <utility>
#include <vector>

namespace graphevt {

/// Mann-Whitney AUC with average ranks for ties: the probability that a
/// random positive outscores a random negative, ties counting one half.
/// Throws std::invalid_argument unless both classes are present or when
/// the lengths differ.
double auc(std::span<const double> scores, std::span<const int> labels);

struct EvalResult {
    double auc = 0.0;
    /// (false-positive rate, true-positive rate) at every distinct score
    /// threshold, from (0,0) to (1,1).
    std::vector<std::pair<double, double>> roc;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
};

EvalResult evaluate(std::span<const double> scores, std::span<const int> labels);

struct BoxplotStats {
    double min = 0.0, q25 = 0.0, median = 0.0, q75 = 0.0, max = 0.0;
};

/// Quartiles by the 1-indexed linear-interpolation percentile.
BoxplotStats boxplot_stats(std::span<const double> values);

} // namespace graphevt
