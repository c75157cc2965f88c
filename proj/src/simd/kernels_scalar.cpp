#include "graphevt/simd/kernels.hpp"

#include <cmath>

namespace graphevt::simd {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += x[i] * y[i];
    return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] += a * x[i];
}

void gemv_scalar(const double* m, std::size_t rows, std::size_t cols, const double* x,
                 double* out) {
    for (std::size_t r = 0; r < rows; ++r)
        out[r] = dot_scalar(m + r * cols, x, cols);
}

double gauss_sum_2d_scalar(const double* xs, const double* ys, std::size_t n, double x0,
                           double y0, double inv_hx, double inv_hy) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double dx = (xs[j] - x0) * inv_hx;
        const double dy = (ys[j] - y0) * inv_hy;
        s += std::exp(-0.5 * (dx * dx + dy * dy));
    }
    return s;
}

} // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", dot_scalar, axpy_scalar, gemv_scalar,
                                   gauss_sum_2d_scalar};
    return table;
}

} // namespace graphevt::simd
