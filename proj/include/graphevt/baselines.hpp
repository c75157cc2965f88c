#pragma once

#include "graphevt/graph.hpp"

#include <span>
#include <vector>

namespace graphevt {

// ---- LAD: Laplacian spectrum with a moving reference window ----

struct LadConfig {
    std::size_t k = 6;      // top singular values per graph
    std::size_t window = 10;
};

struct LadScores {
    std::vector<double> z_raw;
    std::vector<double> z_diff;
};

/// Top-k singular values of L = D - A for a graph padded to n_pad vertices,
/// descending. k is clamped to n_pad.
std::vector<double> laplacian_top_singular_values(const Graph& g, std::size_t n_pad,
                                                  std::size_t k);

/// z_t = 1 - |<s_t / |s_t|, r_t>| where r_t is the leading left singular
/// vector of the previous window's spectra; z_diff_t = max(z_t - z_{t-1}, 0).
/// Entries for t <= window (1-based) are 0. Throws std::invalid_argument
/// unless T > window, window >= 2 and k >= 1.
LadScores lad_scores(std::span<const Graph> graphs, const LadConfig& cfg = {},
                     unsigned workers = 1);

// ---- TensorSplat: rank-1 CP decomposition of the adjacency tensor ----

/// Dense I x J x K tensor; slice k is a row-major I x J matrix.
class Tensor3 {
public:
    Tensor3(std::size_t i, std::size_t j, std::size_t k)
        : dims_{i, j, k}, data_(i * j * k, 0.0) {}

    std::size_t dim(int axis) const { return dims_[axis]; }

    double& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(k * dims_[0] + i) * dims_[1] + j];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(k * dims_[0] + i) * dims_[1] + j];
    }
    const double* slice(std::size_t k) const { return data_.data() + k * dims_[0] * dims_[1]; }

    double squared_norm() const;

private:
    std::size_t dims_[3];
    std::vector<double> data_;
};

/// Adjacency matrices stacked along the third axis, zero-padded to the
/// largest vertex count.
Tensor3 adjacency_tensor(std::span<const Graph> graphs);

struct CpRank1 {
    std::vector<double> u1, u2; // unit norm
    std::vector<double> u3;     // carries the magnitude
    /// Frobenius reconstruction error after each sweep.
    std::vector<double> errors;
    bool converged = false;
};

/// Alternating least squares from u1 = u2 = uniform unit, u3 = ones
/// normalised. Stops when the relative fit 1 - err/|X| changes by less
/// than `tolerance` or after `max_iterations` sweeps.
CpRank1 cp_rank1_als(const Tensor3& x, int max_iterations = 200, double tolerance = 1e-8);

/// |u3_t - median(u3)| / (MAD(u3) + 1e-12); all zero for an all-zero tensor.
/// Throws std::invalid_argument for fewer than 3 graphs.
std::vector<double> tensorsplat_scores(std::span<const Graph> graphs, int iterations = 200);

} // namespace graphevt
