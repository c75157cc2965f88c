#include "graphevt/pipeline.hpp"

#include "graphevt/features.hpp"
#include "graphevt/format.hpp"
#include "graphevt/generators.hpp"

#include <algorithm>

namespace graphevt {

FlagRule parse_flag_rule(const std::string& name) {
    if (name == "score")
        return FlagRule::kScore;
    if (name == "tail")
        return FlagRule::kTail;
    throw ConfigError("unknown flag rule '" + name + "' (expected score or tail)");
}

std::string to_string(FlagRule rule) {
    switch (rule) {
    case FlagRule::kScore:
        return "score";
    case FlagRule::kTail:
        return "tail";
    }
    return "score";
}

Detection detect_from_features(const Matrix& features, const PipelineConfig& cfg) {
    if (features.rows() < kMinSequenceLength)
        throw ConfigError("sequence has " + std::to_string(features.rows()) +
                          " graphs; at least 20 are required");
    if (!(cfg.score_threshold >= 0.0 && cfg.score_threshold <= 1.0))
        throw ConfigError("score threshold must lie in [0, 1]");
    if (!(cfg.threshold_percentile >= 0.0 && cfg.threshold_percentile <= 100.0))
        throw ConfigError("threshold percentile must lie in [0, 100]");

    Detection d;
    d.features = features;
    d.residuals = residual_matrix(features, cfg.workers);
    d.scaled = scale_residuals(d.residuals.residuals);
    d.embedding = robust_pca_2d(d.scaled.y, cfg.pca);
    d.density = kde2d_at_points(d.embedding.z);
    d.v = abs_log_density(d.density);
    d.gpd = fit_gpd(d.v, cfg.threshold_percentile);
    d.scores = anomaly_scores(d.v, d.gpd);
    switch (cfg.flag_rule) {
    case FlagRule::kScore:
        d.flag_scores = d.scores;
        break;
    case FlagRule::kTail:
        d.flag_scores = tail_scores(d.v, d.gpd);
        break;
    }
    d.flagged = classify(d.flag_scores, cfg.score_threshold);
    return d;
}

Detection detect(std::span<const Graph> graphs, const PipelineConfig& cfg) {
    if (graphs.size() < kMinSequenceLength)
        throw ConfigError("sequence has " + std::to_string(graphs.size()) +
                          " graphs; at least 20 are required");
    return detect_from_features(extract_sequence(graphs, cfg.workers), cfg);
}

std::vector<std::pair<std::string, std::string>> diagnostics(const Detection& d,
                                                             const PipelineConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t i = 0; i < d.residuals.models.size(); ++i) {
        const ArimaModel& m = d.residuals.models[i];
        const std::string key = "arima." + std::string(kFeatureNames[i]);
        rows.emplace_back(key + ".p", std::to_string(m.order.p));
        rows.emplace_back(key + ".d", std::to_string(m.order.d));
        rows.emplace_back(key + ".q", std::to_string(m.order.q));
        rows.emplace_back(key + ".fallback", m.fallback ? "1" : "0");
    }
    rows.emplace_back("gpd.u", format_double(d.gpd.u));
    rows.emplace_back("gpd.k", std::to_string(d.gpd.k));
    rows.emplace_back("gpd.sigma_u", format_double(d.gpd.sigma_u));
    rows.emplace_back("gpd.xi", format_double(d.gpd.xi));
    rows.emplace_back("gpd.exponential_limit", d.gpd.exponential_limit ? "1" : "0");
    rows.emplace_back("gpd.degenerate", d.gpd.degenerate ? "1" : "0");
    rows.emplace_back("gpd.loglik", format_double(d.gpd.loglik));
    rows.emplace_back("flag_rule", to_string(cfg.flag_rule));
    rows.emplace_back("score_threshold", format_double(cfg.score_threshold));
    rows.emplace_back("flagged",
                      std::to_string(std::count(d.flagged.begin(), d.flagged.end(), true)));
    return rows;
}

} // namespace graphevt
