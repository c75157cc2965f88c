#pragma once

#include "graphevt/graph.hpp"
#include "graphevt/matrix.hpp"

#include <array>
#include <iosfwd>
#include <span>
#include <string_view>

namespace graphevt {

inline constexpr std::size_t kNumFeatures = 20;

/// Column names, in the fixed feature order.
inline constexpr std::array<std::string_view, kNumFeatures> kFeatureNames{
    "num_vertices",        "num_edges",          "triangles_p99",
    "degree_p99",          "edge_density",       "transitivity",
    "assortativity",       "mean_distance",      "diameter",
    "isolated_pct",        "vertex_connectivity", "global_efficiency",
    "num_components",      "component_size_p99", "closeness_ge_08_pct",
    "betweenness_p99",     "pagerank_p99",       "hub_eigenvalue",
    "authority_eigenvalue", "coreness_p99",
};

enum Feature : std::size_t {
    kNumVertices,
    kNumEdges,
    kTrianglesP99,
    kDegreeP99,
    kEdgeDensity,
    kTransitivity,
    kAssortativity,
    kMeanDistance,
    kDiameter,
    kIsolatedPct,
    kVertexConnectivity,
    kGlobalEfficiency,
    kNumComponents,
    kComponentSizeP99,
    kClosenessGe08Pct,
    kBetweennessP99,
    kPageRankP99,
    kHubEigenvalue,
    kAuthorityEigenvalue,
    kCorenessP99,
};

using FeatureVector = std::array<double, kNumFeatures>;

/// Percentile level used to summarize per-vertex distributions.
inline constexpr double kSummaryPercentile = 99.0;

FeatureVector extract_features(const Graph& g);

/// T x 20 matrix; row t is extract_features(graphs[t]). Rows are computed
/// on up to `workers` threads (0 = one per hardware thread). Throws
/// std::invalid_argument on an empty sequence.
Matrix extract_sequence(std::span<const Graph> graphs, unsigned workers = 1);

/// CSV with a leading 1-based `t` column followed by the feature names.
void write_features_csv(std::ostream& out, const Matrix& features);

} // namespace graphevt
