#pragma once

#include <functional>
#include <span>
#include <vector>

namespace graphevt {

struct NelderMeadOptions {
    int max_iterations = 500;
    /// Stop when max - min of the simplex values is below
    /// tolerance * (1 + |min|).
    double tolerance = 1e-8;
    /// Restart from the best vertex until a restart improves by less than
    /// the tolerance (bounded by this count).
    int max_restarts = 2;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Derivative-free minimisation. The objective may return +inf to reject a
/// point (used for constraints); the starting point must be feasible.
/// `steps` gives the initial simplex edge along each coordinate.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, std::vector<double> steps,
                             const NelderMeadOptions& opts = {});

} // namespace graphevt
