#pragma once

#include <cstdint>

#include "mimoee/physics.hpp"

namespace mimoee {

/// Bounds for the integer search. The feasible set of the EE problem is
/// unbounded in M, so a generous cap is applied and any touch is flagged.
struct SearchCaps {
    int m_cap = 4096;
    int k_cap = 0;  ///< 0 = derive: floor(K_max) when capped, floor(T)-1 otherwise
};

struct CapHit {
    bool m = false;
    bool k = false;
    bool any() const { return m || k; }
};

struct Optimum {
    DesignPoint design{};
    double zeta = 0.0;
    double gamma_u = 0.0;
    CapHit cap_hit{};
    std::int64_t evaluations = 0;
};

struct RelaxedOptimum {
    double M = 0.0;
    double K = 0.0;
    double tau = 0.0;
    double zeta = 0.0;
    bool converged = false;
    std::int64_t evaluations = 0;
};

/// Global integer minimum of 1/zeta over {1 <= K <= k_cap, K <= tau < T,
/// K+1 <= M <= m_cap}. For each (K, tau) the objective is convex in M
/// (decreasing convex SNR term plus a linear term), so M is located by
/// integer ternary search with a local-optimality guard and linear-scan
/// fallback. Ties break toward smaller K, then M, then tau.
Optimum optimize_integer(double R, const Theta& t, const SearchCaps& caps = {},
                         bool capped_k = false);

/// tau-only optimum for a fixed (M, K); only gamma_u depends on tau.
Optimum optimize_fixed_mk(int M, int K, double R, const Theta& t);

/// Joint (M, tau) integer optimum for a fixed K.
Optimum optimize_fixed_k(int K, double R, const Theta& t, const SearchCaps& caps = {});

/// Real-valued relaxation over {1 <= K <= K_max, K <= tau < T, M > K},
/// multi-started from the capped integer optimum and from the ideal-CSI
/// closed form with tau = K_max. Coordinate descent with golden-section
/// line searches; converged when the relative zeta change drops below 1e-10.
RelaxedOptimum optimize_relaxed(double R, const Theta& t);

/// Relaxed (M, tau) optimum for a fixed real K (the fixed-K EE).
RelaxedOptimum optimize_relaxed_fixed_k(double K, double R, const Theta& t);

}  // namespace mimoee
