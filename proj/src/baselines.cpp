#include "graphevt/baselines.hpp"

#include "graphevt/parallel.hpp"
#include "graphevt/simd/kernels.hpp"
#include "graphevt/stats.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphevt {

std::vector<double> laplacian_top_singular_values(const Graph& g, std::size_t n_pad,
                                                  std::size_t k) {
    const std::size_t n = std::max(n_pad, g.num_vertices());
    k = std::min(k, n);
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [a, b] : g.edges()) {
        lap(a, b) = lap(b, a) = -1.0;
        lap(a, a) += 1.0;
        lap(b, b) += 1.0;
    }
    // L is symmetric positive semidefinite, so its singular values are its
    // eigenvalues.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = es.eigenvalues(); // ascending
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i)
        out[i] = std::max(ev(static_cast<Eigen::Index>(n - 1 - i)), 0.0);
    return out;
}

LadScores lad_scores(std::span<const Graph> graphs, const LadConfig& cfg, unsigned workers) {
    const std::size_t T = graphs.size();
    if (cfg.k < 1 || cfg.window < 2)
        throw std::invalid_argument("LAD needs k >= 1 and window >= 2");
    if (T <= cfg.window)
        throw std::invalid_argument("LAD needs more graphs than the window length");

    std::size_t n = 0;
    for (const Graph& g : graphs)
        n = std::max(n, g.num_vertices());
    const std::size_t k = std::min(cfg.k, std::max<std::size_t>(n, 1));

    std::vector<Eigen::VectorXd> sig(T, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k)));
    parallel_for(T, workers, [&](std::size_t t) {
        const auto s = laplacian_top_singular_values(graphs[t], n, k);
        for (std::size_t i = 0; i < s.size(); ++i)
            sig[t](static_cast<Eigen::Index>(i)) = s[i];
    });

    LadScores out{std::vector<double>(T, 0.0), std::vector<double>(T, 0.0)};
    for (std::size_t i = cfg.window; i < T; ++i) {
        // 1-based time t = i + 1; reference columns t-l-1 .. t-1 (1-based).
        const std::size_t first = i >= cfg.window + 1 ? i - cfg.window - 1 : 0;
        Eigen::MatrixXd c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i - first));
        for (std::size_t j = first; j < i; ++j)
            c.col(static_cast<Eigen::Index>(j - first)) = sig[j];

        const double norm_now = sig[i].norm();
        const bool ref_zero = c.squaredNorm() == 0.0;
        double z;
        if (norm_now == 0.0 || ref_zero) {
            z = (norm_now == 0.0 && ref_zero) ? 0.0 : 1.0;
        } else {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c * c.transpose());
            const Eigen::VectorXd ref = es.eigenvectors().col(static_cast<Eigen::Index>(k) - 1);
            z = 1.0 - std::abs(sig[i].dot(ref)) / norm_now;
        }
        out.z_raw[i] = std::clamp(z, 0.0, 1.0);
        out.z_diff[i] = std::max(out.z_raw[i] - out.z_raw[i - 1], 0.0);
    }
    return out;
}

double Tensor3::squared_norm() const {
    return simd::kernels().dot(data_.data(), data_.data(), data_.size());
}

Tensor3 adjacency_tensor(std::span<const Graph> graphs) {
    std::size_t n = 0;
    for (const Graph& g : graphs)
        n = std::max(n, g.num_vertices());
    Tensor3 x(n, n, graphs.size());
    for (std::size_t t = 0; t < graphs.size(); ++t)
        for (const auto& [a, b] : graphs[t].edges())
            x(a, b, t) = x(b, a, t) = 1.0;
    return x;
}

namespace {

double normalise(std::vector<double>& v) {
    const double len = std::sqrt(simd::dot(v, v));
    if (len > 0.0)
        for (double& e : v)
            e /= len;
    return len;
}

} // namespace

CpRank1 cp_rank1_als(const Tensor3& x, int max_iterations, double tolerance) {
    const std::size_t I = x.dim(0), J = x.dim(1), K = x.dim(2);
    const auto& kern = simd::kernels();
    CpRank1 f;
    f.u1.assign(I, 1.0 / std::sqrt(static_cast<double>(I)));
    f.u2.assign(J, 1.0 / std::sqrt(static_cast<double>(J)));
    f.u3.assign(K, 1.0 / std::sqrt(static_cast<double>(K)));

    const double xnorm2 = x.squared_norm();
    if (xnorm2 == 0.0) {
        std::fill(f.u3.begin(), f.u3.end(), 0.0);
        f.converged = true;
        return f;
    }
    const double xnorm = std::sqrt(xnorm2);
    std::vector<double> tmp(I), acc1(I), acc2(J);
    double prev_fit = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        // u1 <- X x2 u2 x3 u3, then move its length into u3.
        std::fill(acc1.begin(), acc1.end(), 0.0);
        for (std::size_t k = 0; k < K; ++k) {
            if (f.u3[k] == 0.0)
                continue;
            kern.gemv(x.slice(k), I, J, f.u2.data(), tmp.data());
            kern.axpy(f.u3[k], tmp.data(), acc1.data(), I);
        }
        const double u2n2 = simd::dot(f.u2, f.u2);
        const double u3n2 = simd::dot(f.u3, f.u3);
        for (double& e : acc1)
            e /= u2n2 * u3n2;
        f.u1 = acc1;
        double len = normalise(f.u1);
        for (double& e : f.u3)
            e *= len;

        // u2 <- X x1 u1 x3 u3, same treatment.
        std::fill(acc2.begin(), acc2.end(), 0.0);
        for (std::size_t k = 0; k < K; ++k) {
            if (f.u3[k] == 0.0)
                continue;
            const double* s = x.slice(k);
            for (std::size_t i = 0; i < I; ++i)
                if (f.u1[i] != 0.0)
                    kern.axpy(f.u3[k] * f.u1[i], s + i * J, acc2.data(), J);
        }
        const double u3n2b = simd::dot(f.u3, f.u3);
        for (double& e : acc2)
            e /= u3n2b;
        f.u2 = acc2;
        len = normalise(f.u2);
        for (double& e : f.u3)
            e *= len;

        // u3 <- X x1 u1 x2 u2 (u1, u2 are unit).
        for (std::size_t k = 0; k < K; ++k) {
            kern.gemv(x.slice(k), I, J, f.u2.data(), tmp.data());
            f.u3[k] = kern.dot(f.u1.data(), tmp.data(), I);
        }

        const double err = std::sqrt(std::max(xnorm2 - simd::dot(f.u3, f.u3), 0.0));
        f.errors.push_back(err);
        const double fit = 1.0 - err / xnorm;
        if (it > 0 && std::abs(fit - prev_fit) < tolerance) {
            f.converged = true;
            break;
        }
        prev_fit = fit;
    }
    return f;
}

std::vector<double> tensorsplat_scores(std::span<const Graph> graphs, int iterations) {
    if (graphs.size() < 3)
        throw std::invalid_argument("TensorSplat needs at least 3 graphs");
    const CpRank1 f = cp_rank1_als(adjacency_tensor(graphs), iterations);
    const double med = median(f.u3);
    const double spread = mad(f.u3) + 1e-12;
    std::vector<double> s(f.u3.size());
    for (std::size_t t = 0; t < s.size(); ++t)
        s[t] = std::abs(f.u3[t] - med) / spread;
    return s;
}

} // namespace graphevt
