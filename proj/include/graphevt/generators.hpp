#pragma once

#include "graphevt/graph.hpp"
#include "graphevt/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphevt {

/// Invalid generator or experiment parameters.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Graph erdos_renyi(std::size_t n, double p, Rng& rng);

/// Growth process from a single vertex. Each arriving vertex attaches `m`
/// edges to distinct existing vertices drawn with probability proportional
/// to (degree + 1)^alpha. Requires n >= m + 1, m >= 1, alpha >= 0.
Graph barabasi_albert(std::size_t n, double alpha, std::size_t m, Rng& rng);

/// Ring lattice with k/2 neighbours per side, each lattice edge rewired with
/// probability p_rewire by redrawing its far endpoint uniformly among
/// vertices that would not create a self-loop or duplicate. Edge count stays
/// n * k / 2. Requires even k < n.
Graph watts_strogatz(std::size_t n, std::size_t k, double p_rewire, Rng& rng);

/// Hub 0 joined to leaves 1..n_edges.
Graph star_graph(std::size_t n_edges);

struct SequenceSpec {
    int experiment_id = 1;
    std::size_t T = 100;
    std::size_t n = 100;
    double p_star = 0.25;
    std::size_t anomaly_time = 50; // 1-based
    std::uint64_t seed = 0;
    bool inject_anomaly = true;
    std::size_t ba_edges_per_vertex = 1;
    std::size_t ws_neighbours = 4;
};

struct LabeledSequence {
    std::vector<Graph> graphs;
    std::vector<int> labels;
};

/// Legal anomaly offsets per experiment.
std::vector<double> experiment_settings(int experiment_id);

/// The time-varying generator parameter at 1-based time t (edge probability
/// for experiments 1, 2 and 4; attachment exponent for experiment 3).
double base_parameter(int experiment_id, std::size_t t, std::size_t T);

/// Parameter used for the replacement graph at the anomaly time.
double anomaly_parameter(const SequenceSpec& spec);

/// Throws ConfigError on an unknown experiment, an offset outside the
/// experiment's legal set, or an anomaly time outside [1, T].
void validate(const SequenceSpec& spec);

/// Graph t (1-based) is drawn from stream split(t) of Rng(spec.seed); the
/// replacement at the anomaly time comes from split(kAnomalyStream + t), so
/// every other graph is identical with and without the injected anomaly.
LabeledSequence make_experiment_sequence(const SequenceSpec& spec);

inline constexpr std::uint64_t kAnomalyStream = 1u << 20;

} // namespace graphevt
