#include "graphevt/graph.hpp"
#include "graphevt/graph_metrics.hpp"
#include "graphevt/rng.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace graphevt;

namespace {

Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

void expect_vec_near(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_NEAR(a[i], b[i], tol) << "index " << i;
}

} // namespace

TEST(Graph, DeduplicatesAndCanonicalises) {
    const std::vector<Edge> e{{1, 0}, {0, 1}, {2, 1}};
    const Graph g(3, e);
    EXPECT_EQ(g.num_edges(), 2u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Graph, RejectsSelfLoopsAndBadEndpoints) {
    const std::vector<Edge> loop{{1, 1}};
    const std::vector<Edge> out{{0, 3}};
    EXPECT_THROW(Graph(3, loop), std::invalid_argument);
    EXPECT_THROW(Graph(3, out), std::invalid_argument);
}

TEST(Metrics, SpecExamples) {
    expect_vec_near(triangles_per_vertex(complete(3)), {1, 1, 1}, 0);
    expect_vec_near(betweenness(path(3)), {0, 1, 0}, 1e-12);
    expect_vec_near(pagerank(cycle(4)), {0.25, 0.25, 0.25, 0.25}, 1e-9);
    expect_vec_near(coreness(complete(4)), {3, 3, 3, 3}, 0);
    expect_vec_near(closeness(star(3)), {1.0, 0.6, 0.6, 0.6}, 1e-12);
}

TEST(Metrics, PerVertexDispatch) {
    const Graph g = star(3);
    EXPECT_EQ(per_vertex_metrics(g, VertexMetric::degree), degrees(g));
    EXPECT_EQ(per_vertex_metrics(g, VertexMetric::coreness), coreness(g));
    EXPECT_TRUE(per_vertex_metrics(Graph(0), VertexMetric::pagerank).empty());
}

TEST(Metrics, PathMetrics) {
    const PathMetrics k3 = path_metrics(complete(3));
    EXPECT_DOUBLE_EQ(k3.mean_distance, 1.0);
    EXPECT_EQ(k3.diameter, 1);
    EXPECT_DOUBLE_EQ(k3.global_efficiency, 1.0);

    const PathMetrics p3 = path_metrics(path(3));
    EXPECT_NEAR(p3.mean_distance, 4.0 / 3.0, 1e-12);
    EXPECT_EQ(p3.diameter, 2);
    EXPECT_NEAR(p3.global_efficiency, 5.0 / 6.0, 1e-12);

    const std::vector<Edge> two{{0, 1}, {2, 3}};
    const PathMetrics d = path_metrics(Graph(4, two));
    EXPECT_DOUBLE_EQ(d.mean_distance, 1.0);
    EXPECT_EQ(d.diameter, 1);
    EXPECT_NEAR(d.global_efficiency, 1.0 / 3.0, 1e-12);

    const PathMetrics empty = path_metrics(Graph(5));
    EXPECT_EQ(empty.mean_distance, 0.0);
    EXPECT_EQ(empty.diameter, 0);
    EXPECT_EQ(empty.global_efficiency, 0.0);
}

TEST(Metrics, Components) {
    const ComponentsSummary e = components_summary(Graph(5));
    EXPECT_EQ(e.count, 5u);
    EXPECT_EQ(e.sizes, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
    EXPECT_DOUBLE_EQ(e.isolated_pct, 100.0);

    const std::vector<Edge> k3{{0, 1}, {1, 2}, {0, 2}};
    const ComponentsSummary k = components_summary(Graph(4, k3));
    EXPECT_EQ(k.count, 2u);
    EXPECT_EQ(k.sizes, (std::vector<std::size_t>{3, 1}));
    EXPECT_DOUBLE_EQ(k.isolated_pct, 25.0);

    const ComponentsSummary p = components_summary(path(4));
    EXPECT_EQ(p.count, 1u);
    EXPECT_EQ(p.sizes, (std::vector<std::size_t>{4}));
    EXPECT_DOUBLE_EQ(p.isolated_pct, 0.0);

    EXPECT_EQ(components_summary(Graph(0)).count, 0u);
}

TEST(Metrics, TransitivityAndAssortativity) {
    EXPECT_DOUBLE_EQ(transitivity(complete(3)), 1.0);
    EXPECT_DOUBLE_EQ(transitivity(star(5)), 0.0);
    std::vector<Edge> k4m{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    EXPECT_DOUBLE_EQ(transitivity(Graph(4, k4m)), 0.75);

    EXPECT_EQ(assortativity_degree(cycle(6)), 0.0);
    EXPECT_NEAR(assortativity_degree(star(4)), -1.0, 1e-12);
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    EXPECT_EQ(assortativity_degree(Graph(4, two)), 0.0);
    EXPECT_EQ(assortativity_degree(Graph(3)), 0.0);
}

TEST(Metrics, VertexConnectivity) {
    EXPECT_EQ(vertex_connectivity(complete(4)), 3);
    EXPECT_EQ(vertex_connectivity(path(3)), 1);
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    EXPECT_EQ(vertex_connectivity(Graph(4, two)), 0);
    EXPECT_EQ(vertex_connectivity(Graph(1)), 0);
    EXPECT_EQ(vertex_connectivity(cycle(7)), 2);
    EXPECT_EQ(local_vertex_connectivity(cycle(6), 0, 3), 2);
}

TEST(Metrics, PrincipalEigenvalue) {
    const std::vector<Edge> k2{{0, 1}};
    EXPECT_NEAR(principal_eigenvalue_gram(Graph(2, k2)), 1.0, 1e-8);
    EXPECT_NEAR(principal_eigenvalue_gram(cycle(4)), 4.0, 1e-8);
    EXPECT_NEAR(principal_eigenvalue_gram(star(9)), 9.0, 1e-8);
    EXPECT_EQ(principal_eigenvalue_gram(Graph(3)), 0.0);
}

TEST(Metrics, InvariantsOnRandomGraphs) {
    Rng rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        const Graph g = oracle::random_graph(30, 0.05 + 0.02 * rep, rng);
        const auto deg = degrees(g);
        EXPECT_DOUBLE_EQ(std::accumulate(deg.begin(), deg.end(), 0.0),
                         2.0 * static_cast<double>(g.num_edges()));
        const auto pr = pagerank(g);
        EXPECT_NEAR(std::accumulate(pr.begin(), pr.end(), 0.0), 1.0, 1e-8);
        const auto core = coreness(g);
        for (std::size_t v = 0; v < deg.size(); ++v)
            EXPECT_LE(core[v], deg[v]);
        if (components_summary(g).count == 1) {
            EXPECT_LE(vertex_connectivity(g), *std::min_element(deg.begin(), deg.end()));
        }
        EXPECT_EQ(betweenness(g), betweenness(g));
    }
    for (double b : betweenness(complete(6)))
        EXPECT_EQ(b, 0.0);
}

TEST(Metrics, AgreesWithBruteForceOracles) {
    Rng rng(2024);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 2 + rng.below(11);
        const Graph g = oracle::random_graph(n, 0.1 + 0.8 * rng.uniform(), rng);
        expect_vec_near(triangles_per_vertex(g), oracle::triangles(g), 1e-9);
        expect_vec_near(betweenness(g), oracle::betweenness(g), 1e-9);
        expect_vec_near(closeness(g), oracle::closeness(g), 1e-9);
        expect_vec_near(coreness(g), oracle::coreness(g), 1e-9);
        EXPECT_EQ(vertex_connectivity(g), oracle::vertex_connectivity(g));
        EXPECT_NEAR(transitivity(g), oracle::transitivity(g), 1e-9);
        EXPECT_NEAR(assortativity_degree(g), oracle::assortativity(g), 1e-9);
    }
}

TEST(Metrics, VertexConnectivityOnDenseGraphs) {
    // Larger graphs where the common-neighbour shortcut dominates the flow.
    Rng rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const Graph g = oracle::random_graph(14, 0.5 + 0.04 * rep, rng);
        EXPECT_EQ(vertex_connectivity(g), oracle::vertex_connectivity(g));
    }
}
