#include "graphevt/experiment.hpp"

#include "graphevt/format.hpp"
#include "graphevt/parallel.hpp"

#include <map>
#include <ostream>
#include <tuple>

namespace graphevt {

std::array<std::vector<double>, 4> score_all_methods(std::span<const Graph> graphs,
                                                     const PipelineConfig& cfg) {
    PipelineConfig inner = cfg;
    inner.workers = 1;
    std::array<std::vector<double>, 4> out;
    out[0] = detect(graphs, inner).scores;
    LadScores lad = lad_scores(graphs, cfg.lad);
    out[1] = std::move(lad.z_raw);
    out[2] = std::move(lad.z_diff);
    out[3] = tensorsplat_scores(graphs, cfg.tensor_iterations);
    return out;
}

ExperimentOutput run_experiment(int experiment_id, const PipelineConfig& cfg) {
    const std::vector<double> settings = experiment_settings(experiment_id);
    const std::size_t jobs = settings.size() * cfg.repeats;
    std::vector<std::array<double, 4>> aucs(jobs);
    parallel_for(jobs, cfg.workers, [&](std::size_t j) {
        SequenceSpec spec;
        spec.experiment_id = experiment_id;
        spec.p_star = settings[j / cfg.repeats];
        spec.seed = cfg.seed + j % cfg.repeats;
        const LabeledSequence seq = make_experiment_sequence(spec);
        const auto scores = score_all_methods(seq.graphs, cfg);
        for (std::size_t m = 0; m < kMethods.size(); ++m)
            aucs[j][m] = auc(scores[m], seq.labels);
    });

    ExperimentOutput out;
    for (std::size_t j = 0; j < jobs; ++j)
        for (std::size_t m = 0; m < kMethods.size(); ++m)
            out.results.push_back({experiment_id, settings[j / cfg.repeats],
                                   cfg.seed + j % cfg.repeats, std::string(kMethods[m]),
                                   aucs[j][m]});
    out.boxplots = summarize(out.results);
    return out;
}

std::vector<BoxplotRow> summarize(std::span<const ResultRow> rows) {
    // Keep first-appearance order of settings and methods.
    std::vector<std::tuple<int, double, std::string>> keys;
    std::map<std::tuple<int, double, std::string>, std::vector<double>> groups;
    for (const ResultRow& r : rows) {
        auto key = std::make_tuple(r.experiment, r.setting, r.method);
        auto [it, fresh] = groups.try_emplace(key);
        if (fresh)
            keys.push_back(key);
        it->second.push_back(r.auc);
    }
    std::vector<BoxplotRow> out;
    for (const auto& key : keys)
        out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                       boxplot_stats(groups[key])});
    return out;
}

void write_boxplot_csv(std::ostream& out, std::span<const BoxplotRow> rows) {
    out << "experiment,setting,method,min,q25,median,q75,max\n";
    for (const BoxplotRow& r : rows)
        out << r.experiment << ',' << format_double(r.setting) << ',' << r.method << ','
            << format_double(r.stats.min) << ',' << format_double(r.stats.q25) << ','
            << format_double(r.stats.median) << ',' << format_double(r.stats.q75) << ','
            << format_double(r.stats.max) << '\n';
}

} // namespace graphevt
