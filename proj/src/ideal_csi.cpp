#include "mimoee/ideal_csi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mimoee/regime.hpp"
#include "mimoee/roots.hpp"

namespace mimoee {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

double g_of_x(double x) {
    require(x >= 0.0, "g_of_x: x must be >= 0");
    if (x < 1e-6) {
        // u = x*ln2: g = u^2/(2*sqrt(ln2)*sqrt(x)) * sqrt(x) ... collapses to
        // ln2^{3/2} * x^2 / 2 * (1 + 5u/12 + O(u^2))
        const double u = x * kLn2;
        return std::pow(kLn2, 1.5) * x * x * 0.5 * (1.0 + 5.0 * u / 12.0);
    }
    if (x > 50.0) {
        // sqrt(x/(2^x-1)) underflows; pull 2^{x/2} out explicitly.
        const double half = std::exp2(0.5 * x);
        const double denom = std::sqrt(1.0 - std::exp2(-x));
        return std::sqrt(x) * half * (x * kLn2 - 1.0 + std::exp2(-x)) / denom;
    }
    const double p = std::exp2(x);
    return std::sqrt(x / (p - 1.0)) * (p * x * kLn2 - p + 1.0);
}

double g_over_sqrt_x(double x) {
    require(x >= 0.0, "g_over_sqrt_x: x must be >= 0");
    if (x < 1e-6) {
        const double u = x * kLn2;
        return std::pow(kLn2, 1.5) * std::pow(x, 1.5) * 0.5 * (1.0 + 5.0 * u / 12.0);
    }
    return g_of_x(x) / std::sqrt(x);
}

double h_of_x(double x) {
    require(x > 0.0, "h_of_x: x must be > 0");
    return (1.0 + 2.0 * s_of_x(x)) / x;
}

double s_of_x(double x) {
    require(x > 0.0, "s_of_x: x must be > 0");
    if (x < 1e-6) {
        // (2^x-1)/N(x) with N ~ u^2/2: s ~ 2/u * (1 - ...) ; keep first order
        const double u = x * kLn2;
        return (2.0 / u) * (1.0 + u / 2.0) / (1.0 + 2.0 * u / 3.0);
    }
    if (x > 50.0) return 1.0 / (x * kLn2 - 1.0 + std::exp2(-x));
    const double p = std::exp2(x);
    return (p - 1.0) / (p * x * kLn2 - p + 1.0);
}

double x_prime(double R, const Theta& t) {
    t.validate();
    require(R > 0.0, "x_prime: R must be > 0");
    const double target = (1.0 + t.rho_d / t.rho_r) * std::sqrt(R * t.rho_r / t.alpha);
    return bisect_increasing([](double x) { return g_of_x(x); }, target, 0.0, 1.0, 8192.0).x;
}

double zeta_csi(double M, double K, double R, const Theta& t) {
    t.validate();
    require(K >= 1.0 && M > K && R > 0.0, "zeta_csi: need M > K >= 1, R > 0");
    const double inv =
        (t.alpha * K * (std::exp2(R / K) - 1.0) / (M - K) + M * t.rho_r + K * t.rho_d + t.rho_s) /
        R;
    return 1.0 / inv;
}

double csi_m_given_k(double K, double R, const Theta& t) {
    return K + std::sqrt(K) * std::sqrt(t.alpha * (std::exp2(R / K) - 1.0) / t.rho_r);
}

double csi_inv_zeta_given_k(double K, double R, const Theta& t) {
    return (K * (t.rho_d + t.rho_r) +
            2.0 * std::sqrt(t.alpha * t.rho_r * K * (std::exp2(R / K) - 1.0)) + t.rho_s) /
           R;
}

CsiOptimum csi_optimum(double R, const Theta& t) {
    t.validate();
    require(R > 0.0, "csi_optimum: R must be > 0");
    const ConditionPair c = c_conditions(t);
    require(c.first.satisfied && c.second.satisfied,
            "csi_optimum: theta fails the C-conditions (K_max > 10, rho_s/alpha > 1/2)");

    CsiOptimum out{};
    out.x_prime = x_prime(R, t);
    const double kmax = k_max(t);
    const double k_unc = R / out.x_prime;
    if (k_unc < 1.0) {
        out.k_opt = 1.0;
        out.clamped = CsiClamp::LowerK1;
    } else if (k_unc > kmax) {
        out.k_opt = kmax;
        out.clamped = CsiClamp::UpperKmax;
    } else {
        out.k_opt = k_unc;
        out.clamped = CsiClamp::Interior;
    }
    out.m_opt = csi_m_given_k(out.k_opt, R, t);
    out.zeta_csi = 1.0 / csi_inv_zeta_given_k(out.k_opt, R, t);
    return out;
}

double fixed_k_penalty_bound(int K, double R, const Theta& t) {
    t.validate();
    require(R > 0.0, "fixed_k_penalty_bound: R must be > 0");
    const ConditionPair c = c_conditions(t);
    require(c.first.satisfied,
            "fixed_k_penalty_bound: ratio condition min(T/4, 1/(3mu), 3beta/(2mu)) > 10 failed");
    const double kmax = k_max(t);
    const double kp = csi_optimum(R, t).k_opt;
    require(kp < 0.75 * kmax, "fixed_k_penalty_bound: K'_csi < (3/4)*K_max failed");
    require(K > (4.0 / 3.0) * kp, "fixed_k_penalty_bound: K > (4/3)*K'_csi failed");
    require(K < kmax, "fixed_k_penalty_bound: K < K_max failed");
    return 2.0 * K / kp;
}

}  // namespace mimoee
