#pragma once

#include "graphevt/arima.hpp"
#include "graphevt/baselines.hpp"
#include "graphevt/evt.hpp"
#include "graphevt/graph.hpp"
#include "graphevt/matrix.hpp"
#include "graphevt/residual_space.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphevt {

/// Which per-point score is compared with score_threshold to raise a flag.
enum class FlagRule {
    /// 1 - P(V >= v): the anomaly score itself.
    kScore,
    /// 1 - S(v - u) above u, 0 below: tail probability given an exceedance.
    kTail,
};

FlagRule parse_flag_rule(const std::string& name);
std::string to_string(FlagRule rule);

struct PipelineConfig {
    double threshold_percentile = 90.0;
    double score_threshold = 0.95;
    FlagRule flag_rule = FlagRule::kScore;
    RobustPcaOptions pca;
    LadConfig lad;
    int tensor_iterations = 200;
    std::uint64_t seed = 0;
    std::size_t repeats = 10;
    unsigned workers = 0; // 0 = one per hardware thread
};

/// Minimum sequence length accepted by detect.
inline constexpr std::size_t kMinSequenceLength = 20;

struct Detection {
    Matrix features;
    ResidualFit residuals;
    ScaledResiduals scaled;
    Embedding2D embedding;
    std::vector<double> density;
    std::vector<double> v;
    GpdFit gpd;
    std::vector<double> scores;      // 1 - P(V >= v)
    std::vector<double> flag_scores; // per cfg.flag_rule
    std::vector<bool> flagged;
};

/// Full detector on a feature matrix. Throws ConfigError when T < 20.
Detection detect_from_features(const Matrix& features, const PipelineConfig& cfg = {});

Detection detect(std::span<const Graph> graphs, const PipelineConfig& cfg = {});

/// key/value rows: ARIMA orders per feature, GPD parameters, flag count.
std::vector<std::pair<std::string, std::string>> diagnostics(const Detection& d,
                                                             const PipelineConfig& cfg);

} // namespace graphevt
