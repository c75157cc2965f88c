#include "graphevt/graph_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

namespace graphevt {
namespace {

constexpr int kUnreached = -1;

// Single-source BFS distances; unreachable vertices get kUnreached.
void bfs(const Graph& g, Vertex s, std::vector<int>& dist, std::vector<Vertex>& queue) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    queue.clear();
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
}

} // namespace

std::vector<double> degrees(const Graph& g) {
    std::vector<double> out(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        out[v] = static_cast<double>(g.degree(v));
    return out;
}

std::vector<double> triangles_per_vertex(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<double> count(n, 0.0);
    std::vector<char> mark(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex w : g.neighbors(u))
            mark[w] = 1;
        // Each triangle u < v < w is seen exactly once.
        for (Vertex v : g.neighbors(u)) {
            if (v <= u)
                continue;
            for (Vertex w : g.neighbors(v)) {
                if (w > v && mark[w]) {
                    count[u] += 1.0;
                    count[v] += 1.0;
                    count[w] += 1.0;
                }
            }
        }
        for (Vertex w : g.neighbors(u))
            mark[w] = 0;
    }
    return count;
}

std::vector<double> closeness(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<double> out(n, 0.0);
    std::vector<int> dist(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        if (g.degree(s) == 0)
            continue;
        bfs(g, s, dist, queue);
        double total = 0.0;
        for (Vertex v : queue)
            total += dist[v];
        out[s] = static_cast<double>(queue.size() - 1) / total;
    }
    return out;
}

std::vector<double> betweenness(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<double> cb(n, 0.0);
    std::vector<int> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<Vertex> order;
    order.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreached);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const Vertex u = order[head];
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[u] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[u] + 1)
                    sigma[w] += sigma[u];
            }
        }
        for (std::size_t i = order.size(); i-- > 1;) {
            const Vertex w = order[i];
            for (Vertex u : g.neighbors(w)) {
                if (dist[u] == dist[w] - 1)
                    delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
            }
            cb[w] += delta[w];
        }
    }
    // Every unordered pair was accumulated from both endpoints.
    for (double& c : cb)
        c *= 0.5;
    return cb;
}

std::vector<double> pagerank(const Graph& g, const PageRankOptions& opts) {
    const std::size_t n = g.num_vertices();
    if (n == 0)
        return {};
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> rank(n, inv_n), next(n);
    for (int it = 0; it < opts.max_iterations; ++it) {
        double dangling = 0.0;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) == 0)
                dangling += rank[v];
        const double base = (1.0 - opts.damping) * inv_n + opts.damping * dangling * inv_n;
        std::fill(next.begin(), next.end(), base);
        for (Vertex u = 0; u < n; ++u) {
            const std::size_t du = g.degree(u);
            if (du == 0)
                continue;
            const double share = opts.damping * rank[u] / static_cast<double>(du);
            for (Vertex w : g.neighbors(u))
                next[w] += share;
        }
        double change = 0.0;
        for (Vertex v = 0; v < n; ++v)
            change += std::abs(next[v] - rank[v]);
        rank.swap(next);
        if (change < opts.tolerance)
            break;
    }
    const double total = std::accumulate(rank.begin(), rank.end(), 0.0);
    for (double& r : rank)
        r /= total;
    return rank;
}

std::vector<double> coreness(const Graph& g) {
    // Batagelj-Zaversnik bucket peeling.
    const std::size_t n = g.num_vertices();
    if (n == 0)
        return {};
    std::vector<std::size_t> deg(n);
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::size_t> bin(max_deg + 1, 0);
    for (std::size_t d : deg)
        ++bin[d];
    std::size_t start = 0;
    for (std::size_t d = 0; d <= max_deg; ++d) {
        const std::size_t c = bin[d];
        bin[d] = start;
        start += c;
    }
    std::vector<Vertex> vert(n);
    std::vector<std::size_t> pos(n);
    for (Vertex v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (std::size_t d = max_deg; d > 0; --d)
        bin[d] = bin[d - 1];
    bin[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = vert[i];
        for (Vertex u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                const std::size_t du = deg[u];
                const std::size_t pu = pos[u];
                const std::size_t pw = bin[du];
                const Vertex w = vert[pw];
                if (u != w) {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    return {deg.begin(), deg.end()};
}

std::vector<double> per_vertex_metrics(const Graph& g, VertexMetric kind) {
    switch (kind) {
    case VertexMetric::degree: return degrees(g);
    case VertexMetric::triangles: return triangles_per_vertex(g);
    case VertexMetric::closeness: return closeness(g);
    case VertexMetric::betweenness: return betweenness(g);
    case VertexMetric::pagerank: return pagerank(g);
    case VertexMetric::coreness: return coreness(g);
    }
    return {};
}

PathMetrics path_metrics(const Graph& g) {
    const std::size_t n = g.num_vertices();
    PathMetrics out;
    if (g.num_edges() == 0)
        return out;
    std::vector<int> dist(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    double sum_dist = 0.0, sum_inv = 0.0;
    std::size_t reachable = 0;
    for (Vertex s = 0; s < n; ++s) {
        bfs(g, s, dist, queue);
        for (Vertex v : queue) {
            if (v == s)
                continue;
            sum_dist += dist[v];
            sum_inv += 1.0 / dist[v];
            out.diameter = std::max(out.diameter, dist[v]);
        }
        reachable += queue.size() - 1;
    }
    out.mean_distance = sum_dist / static_cast<double>(reachable);
    out.global_efficiency = sum_inv / (static_cast<double>(n) * static_cast<double>(n - 1));
    return out;
}

ComponentsSummary components_summary(const Graph& g) {
    const std::size_t n = g.num_vertices();
    ComponentsSummary out;
    if (n == 0)
        return out;
    std::vector<int> dist(n);
    std::vector<char> seen(n, 0);
    std::vector<Vertex> queue;
    std::size_t isolated = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (g.degree(s) == 0)
            ++isolated;
        if (seen[s])
            continue;
        bfs(g, s, dist, queue);
        for (Vertex v : queue)
            seen[v] = 1;
        out.sizes.push_back(queue.size());
    }
    out.count = out.sizes.size();
    out.isolated_pct = 100.0 * static_cast<double>(isolated) / static_cast<double>(n);
    return out;
}

double transitivity(const Graph& g) {
    const auto tri = triangles_per_vertex(g);
    double closed = 0.0, wedges = 0.0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const double d = static_cast<double>(g.degree(v));
        wedges += d * (d - 1.0) / 2.0;
        closed += tri[v]; // sum over vertices = 3 * triangles
    }
    return wedges > 0.0 ? closed / wedges : 0.0;
}

double assortativity_degree(const Graph& g) {
    if (g.num_edges() == 0)
        return 0.0;
    // Symmetric orientation: both marginals are the same distribution.
    double sum = 0.0;
    for (auto [u, v] : g.edges())
        sum += static_cast<double>(g.degree(u) + g.degree(v));
    const double m2 = 2.0 * static_cast<double>(g.num_edges());
    const double mu = sum / m2;
    double var = 0.0, cov = 0.0;
    for (auto [u, v] : g.edges()) {
        const double a = static_cast<double>(g.degree(u)) - mu;
        const double b = static_cast<double>(g.degree(v)) - mu;
        var += a * a + b * b;
        cov += 2.0 * a * b;
    }
    var /= m2;
    cov /= m2;
    if (var < 1e-12)
        return 0.0;
    return cov / var;
}

double principal_eigenvalue_gram(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (g.num_edges() == 0)
        return 0.0;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), ax(n), aax(n);
    auto multiply = [&g, n](const std::vector<double>& in, std::vector<double>& out) {
        for (Vertex v = 0; v < n; ++v) {
            double s = 0.0;
            for (Vertex w : g.neighbors(v))
                s += in[w];
            out[v] = s;
        }
    };
    double lambda = 0.0;
    for (int it = 0; it < 1000; ++it) {
        multiply(x, ax);
        multiply(ax, aax);
        // Rayleigh quotient x^T A^2 x with unit x.
        double rq = 0.0, norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            rq += x[i] * aax[i];
            norm2 += aax[i] * aax[i];
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0)
            return 0.0;
        for (std::size_t i = 0; i < n; ++i)
            x[i] = aax[i] / norm;
        const bool done = std::abs(rq - lambda) <= 1e-10 * std::max(1.0, std::abs(rq));
        lambda = rq;
        if (done)
            break;
    }
    return lambda;
}

} // namespace graphevt
