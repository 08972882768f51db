#include "mimoee/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace mimoee {

RootResult bisect_increasing(const std::function<double(double)>& f, double target,
                             double lo, double hi_seed, double hi_limit) {
    if (!(target > 0.0) || !std::isfinite(target))
        throw std::runtime_error("bisect_increasing: target must be positive and finite");

    double hi = hi_seed;
    double fhi = f(hi);
    while (!(fhi >= target)) {
        hi *= 2.0;
        if (hi > hi_limit)
            throw std::runtime_error("bisect_increasing: bracket expansion failed");
        fhi = f(hi);
    }

    RootResult r;
    double a = lo, b = hi;
    for (r.iterations = 0; r.iterations < 200; ++r.iterations) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        (fm < target ? a : b) = mid;
        // interval tolerance plus a residual guarantee for steep targets
        if (b - a <= 1e-12 + 1e-10 * std::abs(b) &&
            std::abs(fm - target) <= 1e-10 * target)
            break;
    }
    r.x = 0.5 * (a + b);
    r.residual = f(r.x) - target;
    return r;
}

}  // namespace mimoee
