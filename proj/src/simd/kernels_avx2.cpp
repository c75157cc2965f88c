#include "graphevt/simd/kernels.hpp"

#include <cmath>

#if (defined(__x86_64__) || defined(_M_X64)) && !defined(GRAPHEVT_NO_AVX2)
#include <immintrin.h>

// Functions carry the target attribute instead of the whole TU being built
// with -mavx2, so inline library code emitted here stays baseline x86-64.
#define GRAPHEVT_AVX2 __attribute__((target("avx2,fma")))

namespace graphevt::simd {
namespace {

GRAPHEVT_AVX2 inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Cephes-style exp: range reduction by ln2 split in two parts and a (2,3)
// Pade approximant on [-ln2/2, ln2/2]. Relative error ~1 ulp for
// x in [-708, 709]; smaller arguments flush to zero.
GRAPHEVT_AVX2 inline __m256d exp_pd(__m256d x) {
    const __m256d lo_limit = _mm256_set1_pd(-708.0);
    const __m256d hi_limit = _mm256_set1_pd(709.0);
    const __m256d underflow = _mm256_cmp_pd(x, lo_limit, _CMP_LT_OQ);
    x = _mm256_max_pd(_mm256_min_pd(x, hi_limit), lo_limit);

    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d c1 = _mm256_set1_pd(6.93145751953125E-1);
    const __m256d c2 = _mm256_set1_pd(1.42860682030941723212E-6);

    __m256d n = _mm256_round_pd(_mm256_fmadd_pd(x, log2e, _mm256_set1_pd(0.5)),
                                _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC);
    x = _mm256_fnmadd_pd(n, c1, x);
    x = _mm256_fnmadd_pd(n, c2, x);

    const __m256d xx = _mm256_mul_pd(x, x);
    __m256d p = _mm256_set1_pd(1.26177193074810590878E-4);
    p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(3.02994407707441961300E-2));
    p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(9.99999999999999999910E-1));
    p = _mm256_mul_pd(p, x);
    __m256d q = _mm256_set1_pd(3.00198505138664455042E-6);
    q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.52448340349684104192E-3));
    q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.27265548208155028766E-1));
    q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.00000000000000000009E0));

    __m256d r = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    r = _mm256_fmadd_pd(_mm256_set1_pd(2.0), r, _mm256_set1_pd(1.0));

    // 2^n through the exponent field; n is in [-1022, 1023] after clamping.
    const __m128i n32 = _mm256_cvtpd_epi32(n);
    __m256i bits = _mm256_cvtepi32_epi64(n32);
    bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
    bits = _mm256_slli_epi64(bits, 52);
    r = _mm256_mul_pd(r, _mm256_castsi256_pd(bits));
    return _mm256_andnot_pd(underflow, r);
}

GRAPHEVT_AVX2 double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        s += x[i] * y[i];
    return s;
}

GRAPHEVT_AVX2 void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i,
                         _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i)
        y[i] += a * x[i];
}

GRAPHEVT_AVX2 void gemv_avx2(const double* m, std::size_t rows, std::size_t cols,
                             const double* x, double* out) {
    for (std::size_t r = 0; r < rows; ++r)
        out[r] = dot_avx2(m + r * cols, x, cols);
}

GRAPHEVT_AVX2 double gauss_sum_2d_avx2(const double* xs, const double* ys, std::size_t n,
                                       double x0, double y0, double inv_hx, double inv_hy) {
    const __m256d vx0 = _mm256_set1_pd(x0);
    const __m256d vy0 = _mm256_set1_pd(y0);
    const __m256d vix = _mm256_set1_pd(inv_hx);
    const __m256d viy = _mm256_set1_pd(inv_hy);
    const __m256d mhalf = _mm256_set1_pd(-0.5);
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d dx = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(xs + j), vx0), vix);
        const __m256d dy = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(ys + j), vy0), viy);
        const __m256d q = _mm256_fmadd_pd(dx, dx, _mm256_mul_pd(dy, dy));
        acc = _mm256_add_pd(acc, exp_pd(_mm256_mul_pd(mhalf, q)));
    }
    double s = hsum(acc);
    for (; j < n; ++j) {
        const double dx = (xs[j] - x0) * inv_hx;
        const double dy = (ys[j] - y0) * inv_hy;
        s += std::exp(-0.5 * (dx * dx + dy * dy));
    }
    return s;
}

bool cpu_has_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

} // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{"avx2", dot_avx2, axpy_avx2, gemv_avx2, gauss_sum_2d_avx2};
    static const bool supported = cpu_has_avx2();
    return supported ? &table : nullptr;
}

} // namespace graphevt::simd

#else

namespace graphevt::simd {
const KernelTable* avx2_kernels() { return nullptr; }
} // namespace graphevt::simd

#endif
