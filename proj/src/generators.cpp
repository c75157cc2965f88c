#include "graphevt/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace graphevt {

Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError("edge probability must lie in [0, 1]");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < p)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph barabasi_albert(std::size_t n, double alpha, std::size_t m, Rng& rng) {
    if (m < 1 || n < m + 1)
        throw ConfigError("Barabasi-Albert needs m >= 1 and n >= m + 1");
    if (!(alpha >= 0.0))
        throw ConfigError("attachment exponent must be non-negative");
    std::vector<std::size_t> deg(n, 0);
    std::vector<double> weight(n, 0.0);
    std::vector<Edge> edges;
    edges.reserve(n * m);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u)
            weight[u] = std::pow(static_cast<double>(deg[u]) + 1.0, alpha);
        const std::size_t picks = std::min<std::size_t>(m, v);
        for (std::size_t k = 0; k < picks; ++k) {
            double total = 0.0;
            for (Vertex u = 0; u < v; ++u)
                total += weight[u];
            const double r = rng.uniform() * total;
            double acc = 0.0;
            Vertex target = v - 1;
            for (Vertex u = 0; u < v; ++u) {
                if (weight[u] == 0.0)
                    continue;
                acc += weight[u];
                if (r < acc) {
                    target = u;
                    break;
                }
            }
            // Guard the floating-point tail: fall back to the last live vertex.
            while (weight[target] == 0.0)
                --target;
            weight[target] = 0.0;
            edges.emplace_back(target, v);
        }
        for (std::size_t k = edges.size() - picks; k < edges.size(); ++k) {
            ++deg[edges[k].first];
            ++deg[edges[k].second];
        }
    }
    return Graph(n, edges);
}

Graph watts_strogatz(std::size_t n, std::size_t k, double p_rewire, Rng& rng) {
    if (k % 2 != 0 || k >= n)
        throw ConfigError("Watts-Strogatz needs an even k smaller than n");
    if (!(p_rewire >= 0.0 && p_rewire <= 1.0))
        throw ConfigError("rewiring probability must lie in [0, 1]");
    std::vector<std::set<Vertex>> adj(n);
    auto link = [&adj](Vertex a, Vertex b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    for (Vertex u = 0; u < n; ++u)
        for (std::size_t j = 1; j <= k / 2; ++j)
            link(u, static_cast<Vertex>((u + j) % n));

    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (Vertex u = 0; u < n; ++u) {
            const auto v = static_cast<Vertex>((u + j) % n);
            if (rng.uniform() >= p_rewire)
                continue;
            if (adj[u].size() >= n - 1 || !adj[u].contains(v))
                continue;
            Vertex w;
            do {
                w = static_cast<Vertex>(rng.below(n));
            } while (w == u || adj[u].contains(w));
            adj[u].erase(v);
            adj[v].erase(u);
            link(u, w);
        }
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adj[u])
            if (u < v)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph star_graph(std::size_t n_edges) {
    if (n_edges < 1)
        throw ConfigError("star graph needs at least one edge");
    std::vector<Edge> edges;
    for (Vertex leaf = 1; leaf <= n_edges; ++leaf)
        edges.emplace_back(0, leaf);
    return Graph(n_edges + 1, edges);
}

std::vector<double> experiment_settings(int experiment_id) {
    switch (experiment_id) {
    case 1: return {0.10, 0.15, 0.20, 0.25};
    case 2: return {0.05, 0.10, 0.15, 0.20};
    case 3: return {0.25, 0.30, 0.35, 0.40};
    case 4: return {0.05, 0.10, 0.15, 0.20};
    default: throw ConfigError("experiment must be 1, 2, 3 or 4");
    }
}

double base_parameter(int experiment_id, std::size_t t, std::size_t T) {
    const double frac =
        T > 1 ? static_cast<double>(t - 1) / static_cast<double>(T - 1) : 0.0;
    switch (experiment_id) {
    case 1: return 0.05;
    case 2: return 0.05 + frac * 0.45;
    case 3: return 1.1 + frac * 0.8;
    case 4: return 0.05 + frac * 0.25;
    default: throw ConfigError("experiment must be 1, 2, 3 or 4");
    }
}

double anomaly_parameter(const SequenceSpec& spec) {
    if (spec.experiment_id == 1)
        return spec.p_star;
    return spec.p_star + base_parameter(spec.experiment_id, spec.anomaly_time, spec.T);
}

void validate(const SequenceSpec& spec) {
    const auto legal = experiment_settings(spec.experiment_id);
    const bool ok = std::any_of(legal.begin(), legal.end(),
                                [&](double p) { return std::abs(p - spec.p_star) < 1e-9; });
    if (!ok) {
        std::ostringstream msg;
        msg << "p_star " << spec.p_star << " is not a setting of experiment "
            << spec.experiment_id << " (legal:";
        for (double p : legal)
            msg << ' ' << p;
        msg << ')';
        throw ConfigError(msg.str());
    }
    if (spec.T < 1 || spec.anomaly_time < 1 || spec.anomaly_time > spec.T)
        throw ConfigError("anomaly_time must lie in [1, T]");
    if (spec.n < 2)
        throw ConfigError("graphs need at least two vertices");
}

namespace {

Graph draw(const SequenceSpec& spec, double param, Rng& rng) {
    switch (spec.experiment_id) {
    case 1:
    case 2: return erdos_renyi(spec.n, param, rng);
    case 3: return barabasi_albert(spec.n, param, spec.ba_edges_per_vertex, rng);
    case 4: return watts_strogatz(spec.n, spec.ws_neighbours, param, rng);
    default: throw ConfigError("experiment must be 1, 2, 3 or 4");
    }
}

} // namespace

LabeledSequence make_experiment_sequence(const SequenceSpec& spec) {
    validate(spec);
    const Rng root(spec.seed);
    LabeledSequence out;
    out.graphs.reserve(spec.T);
    out.labels.assign(spec.T, 0);
    for (std::size_t t = 1; t <= spec.T; ++t) {
        if (spec.inject_anomaly && t == spec.anomaly_time) {
            Rng rng = root.split(kAnomalyStream + t);
            out.graphs.push_back(draw(spec, anomaly_parameter(spec), rng));
            out.labels[t - 1] = 1;
        } else {
            Rng rng = root.split(t);
            out.graphs.push_back(
                draw(spec, base_parameter(spec.experiment_id, t, spec.T), rng));
        }
    }
    return out;
}

} // namespace graphevt
