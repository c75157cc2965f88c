#pragma once

// Dense arithmetic inner loops shared by the density, projection and
// tensor code. Every kernel has a portable scalar reference; wider
// variants are picked once at runtime from the host CPU and must agree
// with the reference to rounding (see tests/test_simd.cpp).
//
// Set GRAPHEVT_SIMD=scalar in the environment to force the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace graphevt::simd {

struct KernelTable {
    std::string_view name;

    // sum_i x[i] * y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);

    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);

    // out[r] = sum_c m[r * cols + c] * x[c]   (row-major m)
    void (*gemv)(const double* m, std::size_t rows, std::size_t cols, const double* x,
                 double* out);

    // sum_j exp(-0.5 * (((xs[j] - x0) * inv_hx)^2 + ((ys[j] - y0) * inv_hy)^2))
    double (*gauss_sum_2d)(const double* xs, const double* ys, std::size_t n, double x0,
                           double y0, double inv_hx, double inv_hy);
};

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* avx2_kernels();

// Active table: chosen on first use and fixed for the process lifetime.
const KernelTable& kernels();

inline double dot(std::span<const double> x, std::span<const double> y) {
    return kernels().dot(x.data(), y.data(), x.size());
}

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
    kernels().axpy(a, x.data(), y.data(), x.size());
}

} // namespace graphevt::simd
