#pragma once

#include "graphevt/eval.hpp"
#include "graphevt/generators.hpp"
#include "graphevt/io.hpp"
#include "graphevt/pipeline.hpp"

#include <array>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace graphevt {

inline constexpr std::array<std::string_view, 4> kMethods{"proposed", "lad_raw", "lad_diff",
                                                          "tensorsplat"};

/// Scores of every method on one sequence, in kMethods order.
std::array<std::vector<double>, 4> score_all_methods(std::span<const Graph> graphs,
                                                     const PipelineConfig& cfg);

struct BoxplotRow {
    int experiment = 0;
    double setting = 0.0;
    std::string method;
    BoxplotStats stats;
};

struct ExperimentOutput {
    std::vector<ResultRow> results;  // ordered by (setting, seed, method)
    std::vector<BoxplotRow> boxplots; // ordered by (setting, method)
};

/// Repeat r of every setting uses sequence seed cfg.seed + r. Sequences run
/// in parallel on cfg.workers threads; output order does not depend on it.
ExperimentOutput run_experiment(int experiment_id, const PipelineConfig& cfg);

/// Boxplot summaries of AUC per (experiment, setting, method).
std::vector<BoxplotRow> summarize(std::span<const ResultRow> rows);

/// `experiment,setting,method,min,q25,median,q75,max`
void write_boxplot_csv(std::ostream& out, std::span<const BoxplotRow> rows);

} // namespace graphevt
