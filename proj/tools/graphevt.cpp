// Command-line front end: generate, features, detect, baseline, experiment, eval.
//
// Exit status: 0 success, 2 configuration or usage error, 1 runtime failure.

#include "graphevt/baselines.hpp"
#include "graphevt/eval.hpp"
#include "graphevt/experiment.hpp"
#include "graphevt/features.hpp"
#include "graphevt/format.hpp"
#include "graphevt/generators.hpp"
#include "graphevt/io.hpp"
#include "graphevt/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace graphevt;

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

std::vector<Graph> load_sequence(const std::string& path) {
    auto in = open_in(path);
    try {
        return read_sequence_jsonl(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

std::string default_labels_path(const std::string& out) {
    const std::string ext = ".jsonl";
    if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
        return out.substr(0, out.size() - ext.size()) + ".labels.csv";
    return out + ".labels.csv";
}

// Config-file entries become `--key value` arguments placed ahead of the
// command line, so explicit flags (parsed later, last one wins) override them.
std::vector<std::string> with_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty() || args.empty())
        return args;
    auto in = open_in(path);
    std::vector<std::string> injected;
    for (const auto& [key, value] : read_config(in)) {
        injected.push_back("--" + key);
        injected.push_back(value);
    }
    // args[0] is the subcommand; its options follow it.
    args.insert(args.begin() + 1, injected.begin(), injected.end());
    return args;
}

struct Options {
    // generate
    int experiment = 1;
    double p_star = 0.25;
    std::uint64_t seed = 0;
    std::size_t T = 100;
    std::size_t n = 100;
    std::size_t anomaly_time = 50;
    bool no_anomaly = false;
    std::string labels_path;
    // shared
    std::string in, out, config;
    unsigned workers = 0;
    // detect
    std::string scores_path, diagnostics_path;
    std::string flag_rule = "score";
    PipelineConfig pipeline;
    // baseline
    std::string method = "lad_diff";
    // experiment / eval
    std::string results_path, boxplot_path;
};

void add_pipeline_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--threshold-percentile", o.pipeline.threshold_percentile,
                    "GPD threshold percentile")
        ->capture_default_str();
    cmd->add_option("--score-threshold", o.pipeline.score_threshold, "flag threshold")
        ->capture_default_str();
    cmd->add_option("--flag-rule", o.flag_rule, "score | tail")->capture_default_str();
    cmd->add_option("--pca-directions", o.pipeline.pca.random_directions,
                    "random candidate directions")
        ->capture_default_str();
    cmd->add_option("--lad-k", o.pipeline.lad.k, "LAD singular values")->capture_default_str();
    cmd->add_option("--lad-window", o.pipeline.lad.window, "LAD window")->capture_default_str();
    cmd->add_option("--als-iterations", o.pipeline.tensor_iterations, "TensorSplat ALS cap")
        ->capture_default_str();
}

int run_generate(const Options& o) {
    SequenceSpec spec;
    spec.experiment_id = o.experiment;
    spec.p_star = o.p_star;
    spec.seed = o.seed;
    spec.T = o.T;
    spec.n = o.n;
    spec.anomaly_time = o.anomaly_time;
    spec.inject_anomaly = !o.no_anomaly;
    const LabeledSequence seq = make_experiment_sequence(spec);
    auto out = open_out(o.out);
    write_sequence_jsonl(out, seq.graphs);
    auto lab = open_out(o.labels_path.empty() ? default_labels_path(o.out) : o.labels_path);
    write_labels_csv(lab, seq.labels);
    return 0;
}

int run_features(const Options& o) {
    const auto graphs = load_sequence(o.in);
    const Matrix f = extract_sequence(graphs, o.workers);
    if (o.out.empty()) {
        write_features_csv(std::cout, f);
    } else {
        auto out = open_out(o.out);
        write_features_csv(out, f);
    }
    return 0;
}

int run_detect(const Options& o) {
    const auto graphs = load_sequence(o.in);
    const Detection d = detect(graphs, o.pipeline);
    {
        auto out = open_out(o.scores_path);
        write_scores_csv(out, {d.v, d.scores, d.flagged});
    }
    if (!o.diagnostics_path.empty()) {
        auto out = open_out(o.diagnostics_path);
        write_diagnostics_csv(out, diagnostics(d, o.pipeline));
    }
    return 0;
}

int run_baseline(const Options& o) {
    const auto graphs = load_sequence(o.in);
    std::vector<double> s;
    if (o.method == "lad_raw" || o.method == "lad_diff") {
        LadScores lad = lad_scores(graphs, o.pipeline.lad, o.workers);
        s = o.method == "lad_raw" ? lad.z_raw : lad.z_diff;
    } else if (o.method == "tensorsplat") {
        s = tensorsplat_scores(graphs, o.pipeline.tensor_iterations);
    } else {
        throw ConfigError("unknown baseline '" + o.method +
                          "' (expected lad_raw, lad_diff or tensorsplat)");
    }
    auto out = open_out(o.out);
    write_scores_csv(out, {s, s, std::vector<bool>(s.size(), false)});
    return 0;
}

int run_experiment_cmd(const Options& o) {
    const ExperimentOutput r = run_experiment(o.experiment, o.pipeline);
    {
        auto out = open_out(o.results_path);
        write_results_csv(out, r.results);
    }
    if (!o.boxplot_path.empty()) {
        auto out = open_out(o.boxplot_path);
        write_boxplot_csv(out, r.boxplots);
    }
    write_boxplot_csv(std::cout, r.boxplots);
    return 0;
}

int run_eval(const Options& o) {
    if (!o.results_path.empty()) {
        auto in = open_in(o.results_path);
        const auto rows = read_results_csv(in);
        const auto box = summarize(rows);
        if (o.boxplot_path.empty()) {
            write_boxplot_csv(std::cout, box);
        } else {
            auto out = open_out(o.boxplot_path);
            write_boxplot_csv(out, box);
        }
        return 0;
    }
    if (o.scores_path.empty() || o.labels_path.empty())
        throw ConfigError("eval needs --scores and --labels, or --results");
    auto sin = open_in(o.scores_path);
    auto lin = open_in(o.labels_path);
    const ScoreRows scores = read_scores_csv(sin);
    const std::vector<int> labels = read_labels_csv(lin);
    if (scores.score.size() != labels.size())
        throw ConfigError("scores and labels have different lengths");
    std::cout << "auc," << format_double(auc(scores.score, labels)) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-sequence anomaly detection with extreme value scoring"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    Options o;

    auto* gen = app.add_subcommand("generate", "write a synthetic experiment sequence");
    gen->add_option("--experiment", o.experiment, "experiment 1-4")->capture_default_str();
    gen->add_option("--p-star", o.p_star, "anomaly offset")->capture_default_str();
    gen->add_option("--seed", o.seed, "sequence seed")->capture_default_str();
    gen->add_option("--T", o.T, "sequence length")->capture_default_str();
    gen->add_option("--n", o.n, "vertices per graph")->capture_default_str();
    gen->add_option("--anomaly-time", o.anomaly_time, "1-based anomaly time")
        ->capture_default_str();
    gen->add_flag("--no-anomaly", o.no_anomaly, "keep the base graph at the anomaly time");
    gen->add_option("--out", o.out, "JSONL output")->required();
    gen->add_option("--labels", o.labels_path, "labels CSV (default <out>.labels.csv)");

    auto* feat = app.add_subcommand("features", "feature matrix CSV of a sequence");
    feat->add_option("--in", o.in, "JSONL sequence")->required();
    feat->add_option("--out", o.out, "CSV output (default stdout)");
    feat->add_option("--workers", o.workers, "threads (0 = auto)");

    auto* det = app.add_subcommand("detect", "score every time point");
    det->add_option("--in", o.in, "JSONL sequence")->required();
    det->add_option("--scores", o.scores_path, "scores CSV")->required();
    det->add_option("--diagnostics", o.diagnostics_path, "diagnostics CSV");
    det->add_option("--workers", o.workers, "threads (0 = auto)");
    add_pipeline_options(det, o);

    auto* base = app.add_subcommand("baseline", "score with LAD or TensorSplat");
    base->add_option("--in", o.in, "JSONL sequence")->required();
    base->add_option("--method", o.method, "lad_raw | lad_diff | tensorsplat")
        ->capture_default_str();
    base->add_option("--out", o.out, "scores CSV")->required();
    base->add_option("--workers", o.workers, "threads (0 = auto)");
    add_pipeline_options(base, o);

    auto* exp = app.add_subcommand("experiment", "AUC of every method over seeds and settings");
    exp->add_option("--id", o.experiment, "experiment 1-4")->required();
    exp->add_option("--repeats", o.pipeline.repeats, "seeds per setting")->capture_default_str();
    exp->add_option("--seed", o.pipeline.seed, "first seed")->capture_default_str();
    exp->add_option("--results", o.results_path, "results CSV")->required();
    exp->add_option("--boxplot", o.boxplot_path, "boxplot CSV");
    exp->add_option("--workers", o.workers, "threads (0 = auto)");
    add_pipeline_options(exp, o);

    auto* ev = app.add_subcommand("eval", "AUC of a scores file, or boxplots of a results file");
    ev->add_option("--scores", o.scores_path, "scores CSV");
    ev->add_option("--labels", o.labels_path, "labels CSV");
    ev->add_option("--results", o.results_path, "results CSV");
    ev->add_option("--boxplot", o.boxplot_path, "boxplot CSV output (default stdout)");

    for (CLI::App* cmd : {gen, feat, det, base, exp, ev})
        cmd->add_option("--config", o.config, "file of `key = value` lines");

    try {
        std::vector<std::string> args = with_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        o.pipeline.workers = o.workers;
        o.pipeline.flag_rule = parse_flag_rule(o.flag_rule);
        if (*gen)
            return run_generate(o);
        if (*feat)
            return run_features(o);
        if (*det)
            return run_detect(o);
        if (*base)
            return run_baseline(o);
        if (*exp)
            return run_experiment_cmd(o);
        return run_eval(o);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
