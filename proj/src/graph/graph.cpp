#include "graphevt/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphevt {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), offsets_(n + 1, 0) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint outside [0, " + std::to_string(n) +
                                        ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    for (auto [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i)
        offsets_[i + 1] += offsets_[i];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_)
        return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph(g.num_vertices(), edges);
}

} // namespace graphevt
