#include "graphevt/features.hpp"

#include "graphevt/format.hpp"
#include "graphevt/graph_metrics.hpp"
#include "graphevt/parallel.hpp"
#include "graphevt/stats.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace graphevt {

FeatureVector extract_features(const Graph& g) {
    FeatureVector f{};
    const std::size_t n = g.num_vertices();
    const double nd = static_cast<double>(n);
    f[kNumVertices] = nd;
    f[kNumEdges] = static_cast<double>(g.num_edges());
    if (n == 0)
        return f;

    f[kTrianglesP99] = percentile(triangles_per_vertex(g), kSummaryPercentile);
    f[kDegreeP99] = percentile(degrees(g), kSummaryPercentile);
    f[kEdgeDensity] = n < 2 ? 0.0 : f[kNumEdges] / (nd * (nd - 1.0) / 2.0);
    f[kTransitivity] = transitivity(g);
    f[kAssortativity] = assortativity_degree(g);

    const PathMetrics paths = path_metrics(g);
    f[kMeanDistance] = paths.mean_distance;
    f[kDiameter] = paths.diameter;
    f[kGlobalEfficiency] = paths.global_efficiency;

    const ComponentsSummary comps = components_summary(g);
    f[kIsolatedPct] = comps.isolated_pct;
    f[kNumComponents] = static_cast<double>(comps.count);
    std::vector<double> sizes(comps.sizes.begin(), comps.sizes.end());
    f[kComponentSizeP99] = percentile(sizes, kSummaryPercentile);

    f[kVertexConnectivity] = vertex_connectivity(g);

    const auto close = closeness(g);
    const auto high = std::count_if(close.begin(), close.end(), [](double c) { return c >= 0.8; });
    f[kClosenessGe08Pct] = 100.0 * static_cast<double>(high) / nd;

    f[kBetweennessP99] = percentile(betweenness(g), kSummaryPercentile);
    f[kPageRankP99] = percentile(pagerank(g), kSummaryPercentile);

    // Hub and authority eigenvalues coincide for undirected graphs.
    f[kHubEigenvalue] = principal_eigenvalue_gram(g);
    f[kAuthorityEigenvalue] = f[kHubEigenvalue];

    f[kCorenessP99] = percentile(coreness(g), kSummaryPercentile);
    return f;
}

Matrix extract_sequence(std::span<const Graph> graphs, unsigned workers) {
    if (graphs.empty())
        throw std::invalid_argument("cannot extract features from an empty sequence");
    Matrix out(graphs.size(), kNumFeatures);
    parallel_for(graphs.size(), workers, [&](std::size_t t) {
        const FeatureVector f = extract_features(graphs[t]);
        std::copy(f.begin(), f.end(), out.row(t).begin());
    });
    return out;
}

void write_features_csv(std::ostream& out, const Matrix& features) {
    out << 't';
    for (auto name : kFeatureNames)
        out << ',' << name;
    out << '\n';
    for (std::size_t t = 0; t < features.rows(); ++t) {
        out << (t + 1);
        for (double v : features.row(t))
            out << ',' << format_double(v);
        out << '\n';
    }
}

} // namespace graphevt
