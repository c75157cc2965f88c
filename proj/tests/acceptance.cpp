// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed below.

#include "graphevt/arima.hpp"
#include "graphevt/eval.hpp"
#include "graphevt/evt.hpp"
#include "graphevt/experiment.hpp"
#include "graphevt/format.hpp"
#include "graphevt/generators.hpp"
#include "graphevt/graph_metrics.hpp"
#include "graphevt/parallel.hpp"
#include "graphevt/pipeline.hpp"
#include "graphevt/rng.hpp"
#include "graphevt/simd/kernels.hpp"
#include "graphevt/stats.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>

using namespace graphevt;

namespace {

constexpr std::size_t kSeeds = 10;
constexpr double kExp1High = 0.95, kExp1Low = 0.90;  // p* >= 0.15 / p* = 0.10
constexpr double kExp2High = 0.95, kExp2Low = 0.90;  // p* >= 0.10 / p* = 0.05
constexpr double kExp3Min = 0.80;
constexpr double kExp4Min = 0.75;                    // p* >= 0.10
constexpr std::size_t kNullSequences = 100;
constexpr double kMaxMeanFlags = 1.0;
constexpr double kMinQuietShare = 0.5;
constexpr double kFlagThreshold = 0.95;
constexpr double kGraphTol = 1e-9;
constexpr double kAucTol = 1e-12;

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    failures += !pass;
}

void info(const std::string& line) {
    std::printf("INFO %s\n", line.c_str());
    std::fflush(stdout);
}

std::string fmt(double x, int digits = 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

// medians[setting][method]
using Medians = std::map<double, std::map<std::string, double>>;

Medians run(int id) {
    PipelineConfig cfg;
    cfg.repeats = kSeeds;
    const auto t0 = std::chrono::steady_clock::now();
    const ExperimentOutput out = run_experiment(id, cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Medians m;
    std::ostringstream line;
    line << "experiment " << id << " (" << fmt(secs, 1) << " s) median AUC";
    for (const BoxplotRow& b : out.boxplots) {
        m[b.setting][b.method] = b.stats.median;
        line << " | p*=" << format_double(b.setting) << ' ' << b.method << '=' << fmt(b.stats.median);
    }
    info(line.str());
    return m;
}

bool proposed_at_least(const Medians& m, double lo, double hi, double bound, std::string& d) {
    bool ok = true;
    for (const auto& [s, row] : m) {
        if (s < lo - 1e-12 || s > hi + 1e-12)
            continue;
        const double a = row.at("proposed");
        d += "p*=" + format_double(s) + ":" + fmt(a) + ">=" + fmt(bound, 2) + " ";
        ok = ok && a >= bound;
    }
    return ok;
}

bool beats_baselines(const Medians& m, std::string& d, bool strict, double only = -1) {
    bool ok = true;
    for (const auto& [s, row] : m) {
        if (only >= 0 && std::abs(s - only) > 1e-12)
            continue;
        const double a = row.at("proposed");
        double best = 0;
        for (const auto& [method, v] : row)
            if (method != "proposed")
                best = std::max(best, v);
        ok = ok && (strict ? a > best : a >= best);
        d += "p*=" + format_double(s) + ":" + fmt(a) + (strict ? ">" : ">=") + fmt(best) + " ";
    }
    return ok;
}

// Flags on no-anomaly sequences under the default rule, plus the same
// counts for the tail rule and how often each rule flags a real anomaly.
void criterion_6() {
    struct Outcome {
        std::size_t null_score = 0, null_tail = 0;
        bool hit_score = false, hit_tail = false;
    };
    std::vector<Outcome> out(kNullSequences);
    PipelineConfig cfg;
    cfg.workers = 1;
    cfg.score_threshold = kFlagThreshold;
    auto count = [](const std::vector<double>& s) {
        return static_cast<std::size_t>(
            std::count_if(s.begin(), s.end(), [](double x) { return x > kFlagThreshold; }));
    };
    parallel_for(kNullSequences, 0, [&](std::size_t i) {
        SequenceSpec spec;
        spec.experiment_id = 1;
        spec.seed = 1000 + i;
        spec.inject_anomaly = false;
        Detection d = detect(make_experiment_sequence(spec).graphs, cfg);
        out[i].null_score = count(d.scores);
        out[i].null_tail = count(tail_scores(d.v, d.gpd));

        spec.inject_anomaly = true;
        spec.p_star = 0.25;
        d = detect(make_experiment_sequence(spec).graphs, cfg);
        const std::size_t a = spec.anomaly_time - 1;
        out[i].hit_score = d.scores[a] > kFlagThreshold;
        out[i].hit_tail = tail_scores(d.v, d.gpd)[a] > kFlagThreshold;
    });
    const double n = static_cast<double>(kNullSequences);
    double mean[2] = {0, 0}, quiet[2] = {0, 0}, hit[2] = {0, 0};
    for (const Outcome& o : out) {
        mean[0] += o.null_score / n;
        mean[1] += o.null_tail / n;
        quiet[0] += (o.null_score == 0) / n;
        quiet[1] += (o.null_tail == 0) / n;
        hit[0] += o.hit_score / n;
        hit[1] += o.hit_tail / n;
    }
    info("flag rule 'tail' on the same null sequences: mean flags " + fmt(mean[1], 2) +
         ", zero-flag share " + fmt(quiet[1], 2));
    info("anomaly at t=50 flagged (Exp-1 p*=0.25, " + std::to_string(kNullSequences) +
         " seeds): rule 'score' " + fmt(hit[0], 2) + ", rule 'tail' " + fmt(hit[1], 2));
    report(6, mean[0] <= kMaxMeanFlags && quiet[0] >= kMinQuietShare,
           "default rule 'score', " + std::to_string(kNullSequences) +
               " null Exp-1 sequences: mean flags " + fmt(mean[0], 2) +
               " (<= 1), zero-flag share " + fmt(quiet[0], 2) + " (>= 0.5)");
}

void criterion_7() {
    Rng rng(2024);
    std::vector<double> w(10000);
    for (double& x : w)
        x = -std::log1p(-rng.uniform());
    const GpdFit f = fit_gpd_exceedances(w);
    bool ok = f.sigma_u >= 0.9 && f.sigma_u <= 1.1 && std::abs(f.xi) <= 0.1;
    std::string d = "Exp(1) n=10000: sigma=" + fmt(f.sigma_u, 4) + " xi=" + fmt(f.xi, 4);

    // Lattice check on the exponential sample and on two GPD samples.
    std::vector<std::vector<double>> samples{w};
    for (auto [xi, seed] : {std::pair{0.3, 7ull}, std::pair{-0.25, 8ull}}) {
        Rng g(seed);
        std::vector<double> s(2000);
        for (double& x : s)
            x = 1.5 / xi * (std::pow(1.0 - g.uniform(), -xi) - 1.0);
        samples.push_back(s);
    }
    std::size_t beaten = 0;
    for (const auto& s : samples) {
        const GpdFit fit = fit_gpd_exceedances(s);
        const double best = gpd_loglik(s, fit.sigma_u, fit.xi);
        ok = ok && std::abs(best - fit.loglik) < 1e-6;
        for (int i = 0; i < 50; ++i)
            for (int j = 0; j < 50; ++j) {
                const double sg = fit.sigma_u * (0.8 + 0.4 * i / 49.0);
                const double xi = fit.xi - 0.2 + 0.4 * j / 49.0;
                if (xi <= kMinXi) // outside the fitted parameter space
                    continue;
                beaten += gpd_loglik(s, sg, xi) > best + 1e-9;
            }
    }
    ok = ok && beaten == 0;
    report(7, ok, d + "; lattice points beating the optimum: " + std::to_string(beaten));
}

void criterion_8() {
    std::size_t inside = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto y = oracle::simulate_arma(1.0, {0.8}, {}, 500, 1.0, seed);
        const double phi = fit_arima(y, {1, 0, 0}).ar[0];
        inside += phi >= 0.65 && phi <= 0.95;
    }
    std::size_t match = 0, tested = 0;
    const std::vector<std::pair<std::vector<double>, std::vector<double>>> models{
        {{0.6, -0.2}, {0.4}}, {{0.8}, {}}, {{}, {0.7}}, {{}, {}}, {{0.3, 0.3, -0.2}, {-0.3}}};
    for (std::size_t m = 0; m < models.size(); ++m)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            auto y = oracle::simulate_arma(0.5, models[m].first, models[m].second, 100, 1.0,
                                           100 * m + seed);
            if (seed % 2) // integrated variant
                for (std::size_t t = 1; t < y.size(); ++t)
                    y[t] += y[t - 1];
            const ArimaOrder sel = select_order(y);
            match += sel == oracle::exhaustive_order(y, sel.d);
            ++tested;
        }
    report(8, inside >= 90 && match == tested,
           "AR(1) phi in [0.65, 0.95] for " + std::to_string(inside) +
               "/100 seeds (>= 90); select_order matches enumeration on " +
               std::to_string(match) + "/" + std::to_string(tested) + " series");
}

Graph from_edges(std::size_t n, std::vector<Edge> e) { return Graph(n, e); }

bool near(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol)
            return false;
    return true;
}

void criterion_9() {
    const Graph k3 = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    const Graph p3 = from_edges(3, {{0, 1}, {1, 2}});
    const Graph c4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const Graph k4 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const Graph s3 = star_graph(3);
    bool examples = near(triangles_per_vertex(k3), {1, 1, 1}, 0) &&
                    near(betweenness(p3), {0, 1, 0}, 1e-12) &&
                    near(pagerank(c4), {0.25, 0.25, 0.25, 0.25}, 1e-9) &&
                    near(coreness(k4), {3, 3, 3, 3}, 0) &&
                    near(closeness(s3), {1.0, 0.6, 0.6, 0.6}, 1e-12) &&
                    vertex_connectivity(k4) == 3 && vertex_connectivity(p3) == 1 &&
                    transitivity(k3) == 1.0 && std::abs(assortativity_degree(star_graph(4)) + 1) < 1e-12;

    Rng rng(99);
    std::size_t agree = 0;
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 2 + rng.below(11);
        const Graph g = oracle::random_graph(n, 0.1 + 0.8 * rng.uniform(), rng);
        agree += near(triangles_per_vertex(g), oracle::triangles(g), kGraphTol) &&
                 near(betweenness(g), oracle::betweenness(g), kGraphTol) &&
                 near(coreness(g), oracle::coreness(g), kGraphTol) &&
                 vertex_connectivity(g) == oracle::vertex_connectivity(g) &&
                 std::abs(transitivity(g) - oracle::transitivity(g)) <= kGraphTol &&
                 std::abs(assortativity_degree(g) - oracle::assortativity(g)) <= kGraphTol;
    }
    report(9, examples && agree == 100,
           std::string("worked examples ") + (examples ? "match" : "MISMATCH") +
               "; brute-force agreement on " + std::to_string(agree) +
               "/100 random graphs (n <= 12, tol 1e-9)");
}

void criterion_10() {
    Rng rng(5);
    std::size_t agree = 0;
    double worst = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 2 + rng.below(80);
        std::vector<double> s(n);
        std::vector<int> l(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = rep % 3 == 0 ? static_cast<double>(rng.below(6)) : rng.normal();
            l[i] = rng.uniform() < 0.2;
        }
        l[0] = 1; // both classes present
        l[1] = 0;
        const double diff = std::abs(auc(s, l) - oracle::pair_count_auc(s, l));
        worst = std::max(worst, diff);
        agree += diff <= kAucTol;
    }
    report(10, agree == 1000,
           std::to_string(agree) + "/1000 fixtures agree with pair counting (max diff " +
               format_double(worst) + ")");
}

void criterion_11() {
    const double e2 = base_parameter(2, 50, 100), e3 = base_parameter(3, 50, 100),
                 e4 = base_parameter(4, 50, 100);
    auto rounds_to = [](double x, double target, int digits) {
        const double scale = std::pow(10.0, digits);
        return std::round(x * scale) == std::round(target * scale);
    };
    report(11, rounds_to(e2, 0.2727, 4) && rounds_to(e3, 1.496, 3) && rounds_to(e4, 0.1737, 4),
           "t=50 base parameters " + fmt(e2, 6) + " / " + fmt(e3, 6) + " / " + fmt(e4, 6) +
               " vs 0.2727 / 1.496 / 0.1737");
}

} // namespace

int main(int argc, char** argv) {
    // Optional arguments restrict the run to the listed criterion numbers.
    std::vector<int> only;
    for (int i = 1; i < argc; ++i)
        only.push_back(std::atoi(argv[i]));
    auto want = [&](int id) {
        return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
    };
    info(std::string("kernels: ") + std::string(simd::kernels().name));
    if (want(7)) criterion_7();
    if (want(8)) criterion_8();
    if (want(9)) criterion_9();
    if (want(10)) criterion_10();
    if (want(11)) criterion_11();
    if (want(6)) criterion_6();

    Medians m[5];
    for (int id = 1; id <= 4; ++id)
        if (want(id) || (id >= 2 && want(5)))
            m[id] = run(id);
    std::string d;
    bool ok;
    if (want(1)) {
        ok = proposed_at_least(m[1], 0.15, 0.25, kExp1High, d);
        ok = proposed_at_least(m[1], 0.10, 0.10, kExp1Low, d) && ok;
        report(1, ok, d);
    }
    if (want(2)) {
        d.clear();
        ok = proposed_at_least(m[2], 0.10, 0.20, kExp2High, d);
        ok = proposed_at_least(m[2], 0.05, 0.05, kExp2Low, d) && ok;
        report(2, ok, d);
    }
    if (want(3)) {
        d.clear();
        report(3, proposed_at_least(m[3], 0.0, 1.0, kExp3Min, d), d);
    }
    if (want(4)) {
        d.clear();
        ok = proposed_at_least(m[4], 0.10, 0.20, kExp4Min, d);
        d += "| ";
        ok = beats_baselines(m[4], d, true, 0.05) && ok;
        report(4, ok, d);
    }
    if (want(5)) {
        d.clear();
        ok = true;
        for (int id = 2; id <= 4; ++id) {
            d += "exp" + std::to_string(id) + ": ";
            ok = beats_baselines(m[id], d, false) && ok;
        }
        report(5, ok, d);
    }

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
