#include "mimoee/regime.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mimoee/ideal_csi.hpp"
#include "mimoee/roots.hpp"

namespace mimoee {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::NonMassive: return "NonMassive";
        case Regime::Massive: return "Massive";
        default: return "Indeterminate";
    }
}

RatioParams pcp_ratios(const Theta& t) {
    t.validate();
    return RatioParams{t.rho_d / t.rho_r, t.rho_s / t.rho_r, t.rho_0 / t.rho_r};
}

RatioParams pcp_ratios(const PhysicalParams& p) {
    p.validate();
    return RatioParams{p.p_d / p.p_r, p.p_s / p.p_r, p.C0 * p.B / p.p_r};
}

ConditionMargin nonmassive_condition(double R, const Theta& t) {
    t.validate();
    if (!(R > 0.0)) throw std::invalid_argument("nonmassive_condition: R must be > 0");
    // floor of the real square root; exact at perfect squares
    const double fs = std::floor(std::sqrt(t.T));
    ConditionMargin m;
    m.lhs = t.rho_r + 2.0 * t.rho_0;
    m.rhs = t.alpha / (1.0 + fs) +
            t.alpha * (1.0 + fs) / fs * (std::exp2(R / (1.0 - fs / t.T)) - 1.0);
    m.satisfied = m.lhs >= m.rhs;
    return m;
}

double k_max(const Theta& t) {
    t.validate();
    return std::min({t.T / 4.0, t.rho_r / (3.0 * t.rho_0), 3.0 * t.rho_d / (2.0 * t.rho_0)});
}

ConditionPair c_conditions(const Theta& t) {
    ConditionValue c1{k_max(t), false};
    c1.satisfied = c1.value > 10.0;
    ConditionValue c2{t.rho_s / t.alpha, false};
    c2.satisfied = c2.value > 0.5;
    return {c1, c2};
}

bool mud_dominated(int M, int K, const Theta& t) {
    const double k = K;
    const double lhs = M * (2.0 * k * t.rho_0 + 4.0 * k * k * t.rho_0 / t.T) +
                       k * k * k * 8.0 * t.rho_0 / (3.0 * t.T);
    return lhs <= M * t.rho_r + k * t.rho_d;
}

CThetaResult c_theta_and_rmax(const Theta& t) {
    t.validate();
    const double kmax = k_max(t);
    if (!(kmax > 0.0)) throw std::invalid_argument("c_theta_and_rmax: K_max must be > 0");
    const double beta = pcp_ratios(t).beta;
    const double target = (1.0 + beta) * std::sqrt(kmax * t.rho_r / t.alpha);
    const RootResult r =
        bisect_increasing([](double x) { return g_over_sqrt_x(x); }, target, 0.0, 1.0, 8192.0);
    return CThetaResult{r.x, r.x * kmax};
}

RegimeReport check_conditions(double R, const Theta& t) {
    t.validate();
    if (!(R > 0.0)) throw std::invalid_argument("check_conditions: R must be > 0");

    RegimeReport rep;
    rep.nonmassive_condition = nonmassive_condition(R, t);
    const ConditionPair c = c_conditions(t);
    rep.c1 = c.first;
    rep.c2 = c.second;
    rep.k_max = k_max(t);

    const RatioParams ratios = pcp_ratios(t);
    const double one_b2 = (1.0 + ratios.beta) * (1.0 + ratios.beta);

    rep.d1 = ConditionMargin{t.rho_r, t.alpha / (2.0 * ratios.delta), false};
    rep.d1.satisfied = rep.d1.lhs > rep.d1.rhs;

    const double g2 = g_of_x(4.0 * R / (3.0 * rep.k_max));
    rep.d2 = ConditionMargin{t.rho_r, 3.0 * t.alpha * g2 * g2 / (4.0 * one_b2 * R), false};
    rep.d2.satisfied = rep.d2.lhs > rep.d2.rhs;

    const double gr = g_of_x(R);
    rep.d3 = ConditionMargin{t.rho_r, t.alpha * gr * gr / (one_b2 * R), false};
    rep.d3.satisfied = rep.d3.lhs < rep.d3.rhs;

    const CThetaResult ct = c_theta_and_rmax(t);
    rep.c_theta = ct.c;
    rep.r_max = ct.r_max;
    rep.lemma3_agree = rep.d2.satisfied == (R < 0.75 * rep.r_max);

    // Lemma-2 spot check across the K range and a spread of M values.
    rep.lemma2_sampled_ok = true;
    if (rep.c1.satisfied && rep.c2.satisfied) {
        const int kcap = static_cast<int>(std::floor(rep.k_max));
        for (int K = 1; K <= kcap; K = (K < 8) ? K + 1 : K * 2) {
            for (int M : {K + 1, 2 * K + 1, 10 * K, 100 * K, 10000}) {
                if (M < K + 1) continue;
                if (!mud_dominated(M, K, t)) rep.lemma2_sampled_ok = false;
            }
        }
    }

    if (rep.nonmassive_condition.satisfied)
        rep.classification = Regime::NonMassive;
    else if (rep.c1.satisfied && rep.c2.satisfied && rep.d2.satisfied && rep.d3.satisfied)
        rep.classification = Regime::Massive;
    else
        rep.classification = Regime::Indeterminate;
    return rep;
}

EEBracket nonmassive_ee_bracket(double R, const PhysicalParams& p) {
    p.validate();
    if (!(R > 0.0)) throw std::invalid_argument("nonmassive_ee_bracket: R must be > 0");
    EEBracket b{};
    const double denom =
        2.0 * p.p_r + p.p_d + p.p_s + 4.0 * p.C0 * p.B + 32.0 * p.C0 / (3.0 * p.Tc);
    b.upper = R * p.B / denom;
    b.lower = 2.0 / 3.0 * b.upper;
    b.condition_holds = nonmassive_condition(R, normalize(p)).satisfied;
    return b;
}

}  // namespace mimoee
