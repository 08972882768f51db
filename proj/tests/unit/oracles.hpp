#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <cmath>
#include <functional>
#include <limits>

#include "mimoee/physics.hpp"

namespace oracle {

/// Eq.-level rate formula written out directly (bits/s/Hz).
inline double rate(double gamma, int M, int K, int tau, double T) {
    const double num = tau * (M - K) * gamma * gamma;
    const double den = (K + tau) * gamma + 1.0;
    return K * (1.0 - tau / T) * std::log2(1.0 + num / den);
}

/// Inverts the rate formula in gamma by plain bisection.
inline double gamma_by_bisection(int M, int K, int tau, double T, double R) {
    double lo = 0.0, hi = 1.0;
    while (rate(hi, M, K, tau, T) < R) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (rate(mid, M, K, tau, T) < R)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Required SNR through the explicit quadratic-root expression; a different
/// algebraic route than the library's overflow-safe form.
inline double gamma_closed_form(int M, int K, int tau, double T, double R) {
    const double E = std::exp2(R / (K * (1.0 - tau / T))) - 1.0;
    const double A = (K + tau) * E / (2.0 * tau * (M - K));
    return A + std::sqrt(A * A + E / (tau * (M - K)));
}

/// Objective 1/zeta for the integer problem, assembled from scratch.
inline double inv_zeta(int M, int K, int tau, double R, const mimoee::Theta& t) {
    const double g = gamma_closed_form(M, K, tau, t.T, R);
    return (t.alpha * K * g + t.rho_s + K * (t.rho_d + 8.0 / 3.0 * K * K * t.rho_0 / t.T) +
            M * (t.rho_r + 2.0 * K * t.rho_0 + 4.0 * K * K * t.rho_0 / t.T)) /
           R;
}

struct BruteResult {
    int M = 0, K = 0, tau = 0;
    double inv = std::numeric_limits<double>::infinity();
};

/// Full triple-loop enumeration of the integer feasible set.
inline BruteResult brute_force(double R, const mimoee::Theta& t, int m_cap, int k_cap) {
    BruteResult best;
    const int tau_max = static_cast<int>(std::ceil(t.T)) - 1 -
                        ((std::ceil(t.T) == t.T) ? 0 : 0);
    for (int K = 1; K <= k_cap; ++K)
        for (int tau = K; tau <= tau_max && tau < t.T; ++tau) {
            if (R / (K * (1.0 - tau / t.T)) > 1024.0) continue;
            for (int M = K + 1; M <= m_cap; ++M) {
                const double v = inv_zeta(M, K, tau, R, t);
                if (v < best.inv) best = BruteResult{M, K, tau, v};
            }
        }
    return best;
}

/// Reduced ideal-CSI objective 1/zeta'(K), written out directly.
inline double csi_inv_given_k(double K, double R, const mimoee::Theta& t) {
    return (K * (t.rho_d + t.rho_r) +
            2.0 * std::sqrt(t.alpha * t.rho_r * K * (std::exp2(R / K) - 1.0)) + t.rho_s) /
           R;
}

/// Dense-grid minimizer of the reduced objective over [1, k_hi].
inline double csi_k_by_grid(double R, const mimoee::Theta& t, double k_hi, double step = 1e-3) {
    double best_k = 1.0, best = std::numeric_limits<double>::infinity();
    for (double k = 1.0; k <= k_hi + 1e-12; k += step) {
        const double v = csi_inv_given_k(k, R, t);
        if (v < best) {
            best = v;
            best_k = k;
        }
    }
    return best_k;
}

}  // namespace oracle
