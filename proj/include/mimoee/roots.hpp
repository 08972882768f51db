#pragma once

#include <functional>

namespace mimoee {

/// Result of a bracketed root search.
struct RootResult {
    double x = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Solves f(x) = target for a continuous strictly increasing f on [lo, hi_seed, ...).
///
/// The upper bracket is grown geometrically from hi_seed until f(hi) >= target
/// (capped at hi_limit). Bisection then runs to 1e-12 absolute + 1e-10 relative
/// width, 200 iterations max. Throws std::runtime_error if no bracket is found.
RootResult bisect_increasing(const std::function<double(double)>& f, double target,
                             double lo, double hi_seed, double hi_limit = 1e9);

}  // namespace mimoee
