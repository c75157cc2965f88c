#include "graphevt/rng.hpp"
#include "graphevt/simd/kernels.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace graphevt;

namespace {

std::vector<double> randn(std::size_t n, Rng& rng, double scale = 1.0) {
    std::vector<double> v(n);
    for (double& x : v)
        x = scale * rng.normal();
    return v;
}

} // namespace

TEST(Simd, ActiveTableIsKnown) {
    const auto name = simd::kernels().name;
    EXPECT_TRUE(name == "scalar" || name == "avx2");
}

class SimdEquivalence : public ::testing::Test {
protected:
    void SetUp() override {
        wide_ = simd::avx2_kernels();
        if (!wide_)
            GTEST_SKIP() << "AVX2 variant unavailable on this host";
    }
    const simd::KernelTable& ref_ = simd::scalar_kernels();
    const simd::KernelTable* wide_ = nullptr;
};

TEST_F(SimdEquivalence, DotAndAxpy) {
    Rng rng(1);
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 100u, 1001u}) {
        const auto x = randn(n, rng), y = randn(n, rng);
        double mag = 0;
        for (std::size_t i = 0; i < n; ++i)
            mag += std::abs(x[i] * y[i]);
        EXPECT_NEAR(wide_->dot(x.data(), y.data(), n), ref_.dot(x.data(), y.data(), n),
                    1e-14 * (1 + mag));
        auto a = y, b = y;
        ref_.axpy(0.37, x.data(), a.data(), n);
        wide_->axpy(0.37, x.data(), b.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            EXPECT_NEAR(a[i], b[i], 1e-15 * (1 + std::abs(a[i])));
    }
}

TEST_F(SimdEquivalence, Gemv) {
    Rng rng(2);
    for (auto [r, c] : {std::pair{1u, 1u}, std::pair{5u, 3u}, std::pair{20u, 20u},
                        std::pair{100u, 37u}}) {
        const auto m = randn(r * c, rng), x = randn(c, rng);
        std::vector<double> a(r), b(r);
        ref_.gemv(m.data(), r, c, x.data(), a.data());
        wide_->gemv(m.data(), r, c, x.data(), b.data());
        for (std::size_t i = 0; i < r; ++i)
            EXPECT_NEAR(a[i], b[i], 1e-13 * (1 + std::abs(a[i])));
    }
}

TEST_F(SimdEquivalence, GaussSum) {
    Rng rng(3);
    for (std::size_t n : {1u, 2u, 5u, 8u, 100u, 257u}) {
        const auto xs = randn(n, rng, 2.0), ys = randn(n, rng, 40.0);
        for (int rep = 0; rep < 5; ++rep) {
            const double x0 = rng.normal(), y0 = rng.normal();
            const double a = ref_.gauss_sum_2d(xs.data(), ys.data(), n, x0, y0, 1.7, 0.3);
            const double b = wide_->gauss_sum_2d(xs.data(), ys.data(), n, x0, y0, 1.7, 0.3);
            EXPECT_NEAR(a, b, 1e-13 * (1 + a));
        }
        // Far-away query: every term underflows.
        EXPECT_EQ(wide_->gauss_sum_2d(xs.data(), ys.data(), n, 1e4, 1e4, 10.0, 10.0), 0.0);
    }
}
