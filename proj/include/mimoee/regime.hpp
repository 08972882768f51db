#pragma once

#include <utility>

#include "mimoee/physics.hpp"

namespace mimoee {

/// One analytical inequality with both sides exposed so sweeps can locate
/// crossovers by interpolation.
struct ConditionMargin {
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
};

/// A single-valued condition (value compared against a fixed threshold).
struct ConditionValue {
    double value = 0.0;
    bool satisfied = false;
};

using ConditionPair = std::pair<ConditionValue, ConditionValue>;

enum class Regime { NonMassive, Massive, Indeterminate };

/// Gain-independent ratios between the power-consumption parameters.
struct RatioParams {
    double beta;   ///< rho_d/rho_r = p_d/p_r
    double delta;  ///< rho_s/rho_r = p_s/p_r
    double mu;     ///< rho_0/rho_r = C0*B/p_r
};

RatioParams pcp_ratios(const Theta& t);
RatioParams pcp_ratios(const PhysicalParams& p);

struct RegimeReport {
    ConditionMargin nonmassive_condition;  ///< rho_r + 2*rho_0 >= alpha-threshold
    ConditionValue c1;                     ///< min(T/4, rho_r/3rho_0, 3rho_d/2rho_0) > 10
    ConditionValue c2;                     ///< rho_s/alpha > 1/2
    ConditionMargin d1;                    ///< rho_r > alpha/(2*delta)
    ConditionMargin d2;                    ///< rho_r > (3a/(4(1+b)^2 R)) g^2(4R/3Kmax)
    ConditionMargin d3;                    ///< rho_r < (a/(1+b)^2) g^2(R)/R
    double k_max = 0.0;
    double c_theta = 0.0;
    double r_max = 0.0;
    bool lemma3_agree = false;    ///< D.2 computed directly == (R < 3*r_max/4)
    bool lemma2_sampled_ok = false;  ///< p_mud <= M*rho_r + K*rho_d over sampled (M,K)
    Regime classification = Regime::Indeterminate;
};

/// Unnormalized EE bracket for the single-user regime (bits/J).
struct EEBracket {
    double lower;  ///< (2/3) * upper
    double upper;  ///< e(R, Theta) = R*B / (2p_r + p_d + p_s + 4C0B + 32C0/(3Tc))
    bool condition_holds;  ///< whether the single-user sufficient condition held
};

const char* regime_name(Regime r);

/// Sufficient condition for the (M,K) = (2,1) optimum:
/// rho_r + 2*rho_0 >= alpha/(1+floor(sqrt(T)))
///                    + alpha*(1+floor(sqrt(T)))/floor(sqrt(T)) * (2^{R/(1-fs/T)} - 1).
ConditionMargin nonmassive_condition(double R, const Theta& t);

/// User cap keeping compute power below RF + circuit power:
/// min(T/4, rho_r/(3*rho_0), 3*rho_d/(2*rho_0)).
double k_max(const Theta& t);

/// C.1 and C.2 of the ratio conditions.
ConditionPair c_conditions(const Theta& t);

/// Normalized form of p_mud <= M*p_r + K*p_d for one (M, K).
bool mud_dominated(int M, int K, const Theta& t);

/// c(Theta) from g(c)/sqrt(c) = (1+beta)*sqrt(K_max*rho_r/alpha), and
/// R_max = c * K_max.
struct CThetaResult {
    double c;
    double r_max;
};
CThetaResult c_theta_and_rmax(const Theta& t);

/// Every condition evaluated with margins, plus the regime classification.
RegimeReport check_conditions(double R, const Theta& t);

/// Bounds on the optimal unnormalized EE when the single-user condition
/// holds; carries a warning flag instead of erroring when it does not.
EEBracket nonmassive_ee_bracket(double R, const PhysicalParams& p);

}  // namespace mimoee
