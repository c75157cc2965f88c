#pragma once

#include "graphevt/matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace graphevt {

struct TrimmedMoments {
    double mean = 0.0;
    double std = 0.0;
};

/// Mean and sample std of the values lying between the 2.5th and 97.5th
/// percentiles (inclusive). Fewer than two kept values gives the mean of
/// all values and std 0.
TrimmedMoments trimmed_moments(std::span<const double> column);

struct ScaledResiduals {
    Matrix y;
    std::vector<double> center; // trimmed mean per column
    std::vector<double> scale;  // trimmed std per column
};

/// Columns with trimmed std below this are mapped to all-zero.
inline constexpr double kMinScale = 1e-12;

ScaledResiduals scale_residuals(const Matrix& residuals);

struct RobustPcaOptions {
    std::size_t random_directions = 200;
    std::uint64_t seed = 0x5eed'0f'd1'2ec7ULL;
};

/// Consistency factor making the MAD estimate sigma under normality.
inline constexpr double kMadScale = 1.4826;

struct Embedding2D {
    Matrix z;                      // T x 2
    std::vector<double> first;     // unit direction
    std::vector<double> second;    // unit direction orthogonal to `first`
    std::vector<double> center;    // coordinate-wise median
};

/// 1.4826 * MAD of the projections of the rows of `centered` on `direction`.
double projection_scale(const Matrix& centered, std::span<const double> direction);

/// Projection-pursuit robust PCA to two components. Candidate directions
/// are the normalised centred rows followed by `random_directions` seeded
/// random unit vectors; the first direction maximises projection_scale,
/// the second maximises it over candidates deflated onto the orthogonal
/// complement of the first. Ties go to the lowest candidate index.
/// Throws std::invalid_argument for fewer than 5 rows.
Embedding2D robust_pca_2d(const Matrix& y, const RobustPcaOptions& opts = {});

} // namespace graphevt
