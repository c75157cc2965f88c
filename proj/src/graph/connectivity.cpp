#include "graphevt/graph_metrics.hpp"

#include <algorithm>
#include <limits>

namespace graphevt {
namespace {

// Unit vertex-capacity flow network: vertex v becomes v_in = 2v and
// v_out = 2v + 1 joined by a capacity-1 arc; an undirected edge {u, w}
// becomes arcs u_out -> w_in and w_out -> u_in. A max s_out -> t_in flow
// counts internally vertex-disjoint s-t paths.
class SplitNetwork {
public:
    explicit SplitNetwork(const Graph& g) : g_(g), nodes_(2 * g.num_vertices()) {
        head_.assign(nodes_, -1);
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            add_arc(2 * v, 2 * v + 1);
        for (auto [u, w] : g.edges()) {
            add_arc(2 * u + 1, 2 * w);
            add_arc(2 * w + 1, 2 * u);
        }
        initial_cap_ = cap_;
        parent_arc_.resize(nodes_);
        queue_.reserve(nodes_);
    }

    // Max flow from s_out to t_in, stopping early once `bound` is reached.
    int max_flow(Vertex s, Vertex t, int bound) {
        cap_ = initial_cap_;
        const int source = 2 * static_cast<int>(s) + 1;
        const int sink = 2 * static_cast<int>(t);
        int flow = route_common_neighbours(s, t, bound);
        while (flow < bound && augment(source, sink))
            ++flow;
        return flow;
    }

private:
    // Paths s - x - t through common neighbours x are vertex-disjoint, so
    // they can be saturated directly before searching for augmenting paths.
    int route_common_neighbours(Vertex s, Vertex t, int bound) {
        const auto ns = g_.neighbors(s), nt = g_.neighbors(t);
        int flow = 0;
        for (std::size_t i = 0, j = 0; i < ns.size() && j < nt.size() && flow < bound;) {
            if (ns[i] < nt[j]) {
                ++i;
            } else if (nt[j] < ns[i]) {
                ++j;
            } else {
                const int x = static_cast<int>(ns[i]);
                if (x != static_cast<int>(s) && x != static_cast<int>(t)) {
                    use(arc(2 * static_cast<int>(s) + 1, 2 * x));
                    use(arc(2 * x, 2 * x + 1));
                    use(arc(2 * x + 1, 2 * static_cast<int>(t)));
                    ++flow;
                }
                ++i;
                ++j;
            }
        }
        return flow;
    }

    int arc(int from, int to) const {
        for (int a = head_[from]; a != -1; a = next_[a])
            if (to_[a] == to && initial_cap_[a] == 1)
                return a;
        return -1;
    }
    void use(int a) {
        --cap_[a];
        ++cap_[a ^ 1];
    }

    void add_arc(int from, int to) {
        push(from, to, 1);
        push(to, from, 0);
    }
    void push(int from, int to, int cap) {
        to_.push_back(to);
        cap_.push_back(cap);
        next_.push_back(head_[from]);
        head_[from] = static_cast<int>(to_.size()) - 1;
    }

    bool augment(int source, int sink) {
        std::fill(parent_arc_.begin(), parent_arc_.end(), -2);
        parent_arc_[source] = -1;
        queue_.clear();
        queue_.push_back(source);
        for (std::size_t h = 0; h < queue_.size(); ++h) {
            const int u = queue_[h];
            for (int a = head_[u]; a != -1; a = next_[a]) {
                const int w = to_[a];
                if (cap_[a] > 0 && parent_arc_[w] == -2) {
                    parent_arc_[w] = a;
                    if (w == sink) {
                        for (int x = sink; x != source;) {
                            const int arc = parent_arc_[x];
                            --cap_[arc];
                            ++cap_[arc ^ 1];
                            x = to_[arc ^ 1];
                        }
                        return true;
                    }
                    queue_.push_back(w);
                }
            }
        }
        return false;
    }

    const Graph& g_;
    int nodes_;
    std::vector<int> head_, to_, next_, cap_, initial_cap_, parent_arc_, queue_;
};

bool is_connected(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0)
        return false;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

} // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
    SplitNetwork net(g);
    return net.max_flow(s, t, std::numeric_limits<int>::max());
}

int vertex_connectivity(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n < 2 || !is_connected(g))
        return 0;
    if (g.num_edges() == n * (n - 1) / 2)
        return static_cast<int>(n - 1);

    // Esfahanian-Hakimi: with v of minimum degree, a minimum separator either
    // misses v (then it separates v from some non-neighbour) or contains v
    // (then it separates two non-adjacent neighbours of v).
    Vertex v = 0;
    for (Vertex u = 1; u < n; ++u)
        if (g.degree(u) < g.degree(v))
            v = u;
    int best = static_cast<int>(g.degree(v));

    SplitNetwork net(g);
    std::vector<char> adjacent(n, 0);
    for (Vertex w : g.neighbors(v))
        adjacent[w] = 1;
    for (Vertex w = 0; w < n && best > 0; ++w) {
        if (w == v || adjacent[w])
            continue;
        best = std::min(best, net.max_flow(v, w, best));
    }
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (g.has_edge(nb[i], nb[j]))
                continue;
            best = std::min(best, net.max_flow(nb[i], nb[j], best));
        }
    }
    return best;
}

} // namespace graphevt
