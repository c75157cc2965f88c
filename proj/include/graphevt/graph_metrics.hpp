#pragma once

#include "graphevt/graph.hpp"

#include <cstddef>
#include <vector>

namespace graphevt {

enum class VertexMetric { degree, triangles, closeness, betweenness, pagerank, coreness };

/// One value per vertex for the requested metric.
///
///  - degree:      number of incident edges
///  - triangles:   number of triangles containing the vertex
///  - closeness:   (|C_v| - 1) / sum of distances within the vertex's component;
///                 0 for isolated vertices
///  - betweenness: Brandes shortest-path betweenness, unnormalized, each
///                 unordered endpoint pair counted once
///  - pagerank:    damping 0.85, uniform teleport, dangling mass spread
///                 uniformly; sums to 1
///  - coreness:    k-core number
std::vector<double> per_vertex_metrics(const Graph& g, VertexMetric kind);

std::vector<double> degrees(const Graph& g);
std::vector<double> triangles_per_vertex(const Graph& g);
std::vector<double> closeness(const Graph& g);
std::vector<double> betweenness(const Graph& g);

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-8; // L1 change between iterations
    int max_iterations = 200;
};
std::vector<double> pagerank(const Graph& g, const PageRankOptions& opts = {});

std::vector<double> coreness(const Graph& g);

struct PathMetrics {
    double mean_distance = 0.0; // over reachable ordered pairs u != v
    int diameter = 0;           // over connected pairs
    double global_efficiency = 0.0; // mean 1/d over all ordered pairs, 1/inf = 0
};
PathMetrics path_metrics(const Graph& g);

struct ComponentsSummary {
    std::size_t count = 0;
    std::vector<std::size_t> sizes; // in order of each component's smallest vertex
    double isolated_pct = 0.0;
};
ComponentsSummary components_summary(const Graph& g);

/// 3 * triangles / wedges; 0 without wedges.
double transitivity(const Graph& g);

/// Degree assortativity: Pearson correlation of endpoint degrees with each
/// edge contributing both orientations. 0 when the degree variance over
/// edge endpoints is below 1e-12 or there are no edges.
double assortativity_degree(const Graph& g);

/// Minimum number of vertices whose removal disconnects the graph.
/// K_n gives n - 1; disconnected graphs and graphs with fewer than two
/// vertices give 0.
int vertex_connectivity(const Graph& g);

/// Local vertex connectivity between two distinct non-adjacent vertices:
/// the number of internally vertex-disjoint s-t paths.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t);

/// Largest eigenvalue of A A^T by power iteration (tolerance 1e-10,
/// at most 1000 iterations). Equal to lambda_max(A)^2 for undirected graphs.
double principal_eigenvalue_gram(const Graph& g);

} // namespace graphevt
