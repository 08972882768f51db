#pragma once

#include "mimoee/physics.hpp"

namespace mimoee {

/// Which clamp (if any) fixed the optimal user count.
enum class CsiClamp { Interior, LowerK1, UpperKmax };

/// Closed-form optimum of the perfect-CSI, zero-compute-power system.
struct CsiOptimum {
    double x_prime;   ///< root of g(x) = (1 + rho_d/rho_r)*sqrt(R*rho_r/alpha)
    double k_opt;     ///< clamp(R/x_prime, [1, K_max])
    double m_opt;     ///< k + sqrt(k)*sqrt(alpha*(2^{R/k}-1)/rho_r)
    double zeta_csi;  ///< normalized EE at (m_opt, k_opt)
    CsiClamp clamped;
};

/// g(x) = sqrt(x/(2^x-1)) * (2^x*x*ln2 - 2^x + 1); continuous with g(0) = 0,
/// strictly increasing. Uses a series branch below x = 1e-6 and a scaled
/// branch for large x so sqrt-underflow never produces NaN.
double g_of_x(double x);

/// g(x)/sqrt(x); strictly increasing and unbounded, with limit 0 at 0.
double g_over_sqrt_x(double x);

/// h(x) = (1/x)*(1 + 2*(2^x-1)/(2^x*x*ln2 - 2^x + 1)); strictly decreasing.
/// 1/zeta'_csi = (rho_r + rho_d)*h(x') + rho_s/R on the interior branch.
double h_of_x(double x);

/// s(x) = (2^x-1)/(2^x*x*ln2 - 2^x + 1); strictly decreasing.
/// M'_csi = K'_csi * (1 + (1+beta)*s(x')).
double s_of_x(double x);

/// Unique positive root of g(x) = (1 + rho_d/rho_r)*sqrt(R*rho_r/alpha).
double x_prime(double R, const Theta& t);

/// Ideal-system normalized EE at real-valued (M, K):
/// 1/zeta = (1/R)*(alpha*K*(2^{R/K}-1)/(M-K) + M*rho_r + K*rho_d + rho_s).
double zeta_csi(double M, double K, double R, const Theta& t);

/// Optimal M for a fixed K: K + sqrt(K)*sqrt(alpha*(2^{R/K}-1)/rho_r).
double csi_m_given_k(double K, double R, const Theta& t);

/// Reduced objective 1/zeta'_csi(K) after optimizing out M:
/// (1/R)*(K*(rho_d+rho_r) + 2*sqrt(alpha*rho_r*K*(2^{R/K}-1)) + rho_s).
double csi_inv_zeta_given_k(double K, double R, const Theta& t);

/// Closed-form optimum over (M, K) with 1 <= K <= K_max(theta).
/// Requires theta to satisfy the C-conditions (K_max > 10, rho_s/alpha > 1/2).
CsiOptimum csi_optimum(double R, const Theta& t);

/// Theorem bound 2*K/K'_csi on the EE loss from fixing K above the optimum.
/// Preconditions (each reported by name on failure): ratio conditions with
/// K_max > 10, K'_csi < (3/4)*K_max, (4/3)*K'_csi < K < K_max.
double fixed_k_penalty_bound(int K, double R, const Theta& t);

}  // namespace mimoee
