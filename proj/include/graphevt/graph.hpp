#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphevt {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph at one time point.
///
/// Construction validates endpoints, drops duplicate edges (in either
/// orientation) and rejects self-loops. The canonical edge list stores each
/// edge once as (min, max), sorted lexicographically; adjacency lists are
/// sorted ascending.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
};

/// Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

} // namespace graphevt
