#include "graphevt/eval.hpp"

#include "graphevt/stats.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graphevt {
namespace {

std::pair<std::size_t, std::size_t> class_counts(std::span<const double> scores,
                                                 std::span<const int> labels) {
    if (scores.size() != labels.size())
        throw std::invalid_argument("scores and labels differ in length");
    std::size_t pos = 0;
    for (int l : labels)
        pos += l != 0;
    const std::size_t neg = labels.size() - pos;
    if (pos == 0 || neg == 0)
        throw std::invalid_argument("AUC needs at least one positive and one negative label");
    return {pos, neg};
}

std::vector<std::size_t> order_by_score(std::span<const double> scores) {
    std::vector<std::size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    return idx;
}

} // namespace

double auc(std::span<const double> scores, std::span<const int> labels) {
    const auto [pos, neg] = class_counts(scores, labels);
    const auto idx = order_by_score(scores);
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && scores[idx[j]] == scores[idx[i]])
            ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t m = i; m < j; ++m)
            if (labels[idx[m]] != 0)
                rank_sum += avg_rank;
        i = j;
    }
    const double p = static_cast<double>(pos), n = static_cast<double>(neg);
    return (rank_sum - p * (p + 1.0) / 2.0) / (p * n);
}

EvalResult evaluate(std::span<const double> scores, std::span<const int> labels) {
    EvalResult r;
    std::tie(r.n_pos, r.n_neg) = class_counts(scores, labels);
    r.auc = auc(scores, labels);
    auto idx = order_by_score(scores);
    std::reverse(idx.begin(), idx.end());
    r.roc.emplace_back(0.0, 0.0);
    std::size_t tp = 0, fp = 0;
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && scores[idx[j]] == scores[idx[i]]) {
            (labels[idx[j]] != 0 ? tp : fp) += 1;
            ++j;
        }
        r.roc.emplace_back(static_cast<double>(fp) / static_cast<double>(r.n_neg),
                           static_cast<double>(tp) / static_cast<double>(r.n_pos));
        i = j;
    }
    return r;
}

BoxplotStats boxplot_stats(std::span<const double> values) {
    std::vector<double> s(values.begin(), values.end());
    std::sort(s.begin(), s.end());
    if (s.empty())
        return {};
    return {s.front(), percentile_sorted(s, 25.0), percentile_sorted(s, 50.0),
            percentile_sorted(s, 75.0), s.back()};
}

} // namespace graphevt
