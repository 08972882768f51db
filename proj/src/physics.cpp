#include "mimoee/physics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mimoee {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

/// Largest per-user rate exponent before 2^x is considered pathological.
constexpr double kMaxExponent = 1024.0;

}  // namespace

void PhysicalParams::validate() const {
    require(N0 > 0.0, "PhysicalParams: N0 must be > 0");
    require(B > 0.0, "PhysicalParams: B must be > 0");
    require(Tc > 0.0, "PhysicalParams: Tc must be > 0");
    require(Gc > 0.0, "PhysicalParams: Gc must be > 0");
    require(alpha > 1.0, "PhysicalParams: alpha must be > 1");
    require(p_r > 0.0, "PhysicalParams: p_r must be > 0");
    require(p_d > 0.0, "PhysicalParams: p_d must be > 0");
    require(p_s > 0.0, "PhysicalParams: p_s must be > 0");
    require(C0 > 0.0, "PhysicalParams: C0 must be > 0");
    require(B * Tc > 1.0, "PhysicalParams: T = B*Tc must be > 1");
}

void Theta::validate() const {
    require(alpha > 1.0, "Theta: alpha must be > 1");
    require(rho_r > 0.0, "Theta: rho_r must be > 0");
    require(rho_d > 0.0, "Theta: rho_d must be > 0");
    require(rho_s > 0.0, "Theta: rho_s must be > 0");
    require(rho_0 > 0.0, "Theta: rho_0 must be > 0");
    require(T > 1.0, "Theta: T must be > 1");
}

void DesignPoint::validate(double T) const {
    require(K >= 1, "DesignPoint: K must be >= 1");
    require(M >= K + 1, "DesignPoint: M must be >= K + 1");
    require(tau >= K, "DesignPoint: tau must be >= K");
    require(static_cast<double>(tau) < T, "DesignPoint: tau must be < T");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double x) { return 10.0 * std::log10(x); }

Theta normalize(const PhysicalParams& p) {
    p.validate();
    const double nb = p.N0 * p.B;
    return Theta{p.alpha, p.Gc * p.p_r / nb, p.Gc * p.p_d / nb, p.Gc * p.p_s / nb,
                 p.Gc * p.C0 / p.N0, p.B * p.Tc};
}

PhysicalParams denormalize(const Theta& t, double N0, double B, double Gc) {
    t.validate();
    require(N0 > 0.0 && B > 0.0 && Gc > 0.0, "denormalize: N0, B, Gc must be > 0");
    const double nb = N0 * B;
    PhysicalParams p{N0,
                     B,
                     t.T / B,
                     Gc,
                     t.alpha,
                     t.rho_r * nb / Gc,
                     t.rho_d * nb / Gc,
                     t.rho_s * nb / Gc,
                     t.rho_0 * N0 / Gc};
    p.validate();
    return p;
}

double achievable_rate(double gamma_u, const DesignPoint& d, double T) {
    d.validate(T);
    require(gamma_u >= 0.0, "achievable_rate: gamma_u must be >= 0");
    if (gamma_u == 0.0) return 0.0;
    const double m = static_cast<double>(d.M - d.K);
    // tau*(M-K)*g^2 / ((K+tau)*g + 1), written to avoid overflow in g^2
    const double sinr = gamma_u * d.tau * m / (static_cast<double>(d.K + d.tau) + 1.0 / gamma_u);
    return d.K * (1.0 - d.tau / T) * std::log2(1.0 + sinr);
}

namespace {

/// 2^{R/(K(1-tau/T))} - 1 with the exponent-overflow guard.
double rate_exponent_term(double K, double tau, double R, double T) {
    const double x = R / (K * (1.0 - tau / T));
    if (x > kMaxExponent)
        throw std::invalid_argument("required_gamma_u: rate exponent exceeds 1024 bits");
    return std::exp2(x) - 1.0;
}

void check_gamma_domain(const DesignPoint& d, double R, double T) {
    d.validate(T);
    require(R > 0.0, "required_gamma_u: R must be > 0");
}

}  // namespace

double required_gamma_u(const DesignPoint& d, double R, double T) {
    check_gamma_domain(d, R, T);
    const double E = rate_exponent_term(d.K, d.tau, R, T);
    const double m = static_cast<double>(d.M - d.K);
    const double A = (d.K + d.tau) * E / (2.0 * d.tau * m);
    // gamma = A*(1 + sqrt(1 + v)); this form never squares A.
    const double v = 4.0 * d.tau * m / (static_cast<double>(d.K + d.tau) * (d.K + d.tau) * E);
    return A * (1.0 + std::sqrt(1.0 + v));
}

double gamma_u_upper_bound(const DesignPoint& d, double R, double T) {
    check_gamma_domain(d, R, T);
    const double E = rate_exponent_term(d.K, d.tau, R, T);
    const double m = static_cast<double>(d.M - d.K);
    return (d.K + d.tau) * E / (d.tau * m) + 1.0 / (d.K + d.tau);
}

double gamma_u_bound_slack_v(const DesignPoint& d, double R, double T) {
    check_gamma_domain(d, R, T);
    const double E = rate_exponent_term(d.K, d.tau, R, T);
    const double m = static_cast<double>(d.M - d.K);
    return 4.0 * d.tau * m / (static_cast<double>(d.K + d.tau) * (d.K + d.tau) * E);
}

OpCounts op_count(int M, int K, int tau, double T) {
    DesignPoint{M, K, tau}.validate(T);
    OpCounts c{};
    c.chest = 2.0 * M * K * tau;
    c.gram = 2.0 * M * static_cast<double>(K) * K;
    c.inverse = 8.0 * K * static_cast<double>(K) * K / 3.0;
    c.pinv_mult = c.gram;
    c.pseudo_inverse = c.gram + c.inverse + c.pinv_mult;
    c.estimation_phase = c.chest + c.pseudo_inverse;
    c.data_phase = 2.0 * M * K * (T - tau);
    c.total = c.estimation_phase + c.data_phase;
    return c;
}

MudPower mud_power(int M, int K, const PhysicalParams& p) {
    p.validate();
    require(K >= 1 && M >= K + 1, "mud_power: need M >= K+1, K >= 1");
    MudPower out{};
    out.est_W = 2.0 * M * K * p.C0 * p.B;
    out.gram_W = 4.0 * M * static_cast<double>(K) * K * p.C0 / p.Tc;
    out.inv_W = 8.0 * K * static_cast<double>(K) * K * p.C0 / (3.0 * p.Tc);
    out.total_W = out.est_W + out.gram_W + out.inv_W;
    // tau drops out of the total; any feasible pilot length gives the rows
    const int tau = std::min(std::max(K, 1), static_cast<int>(std::ceil(p.B * p.Tc)) - 1);
    out.ops = op_count(M, K, tau, p.B * p.Tc);
    return out;
}

PowerBreakdown breakdown_real(double gamma_u, double M, double K, const Theta& t) {
    PowerBreakdown b{};
    b.pa = t.alpha * K * gamma_u;
    b.bs_rf = M * t.rho_r;
    b.mud = M * (2.0 * K * t.rho_0 + 4.0 * K * K * t.rho_0 / t.T) +
            K * (8.0 / 3.0) * K * K * t.rho_0 / t.T;
    b.circuit = K * t.rho_d;
    b.fixed = t.rho_s;
    return b;
}

double inv_zeta_real(double M, double K, double tau, double R, const Theta& t) {
    t.validate();
    require(K >= 1.0 && M > K && tau >= K && tau < t.T && R > 0.0,
            "inv_zeta_real: domain violation");
    const double x = R / (K * (1.0 - tau / t.T));
    if (x > kMaxExponent)
        throw std::invalid_argument("inv_zeta_real: rate exponent exceeds 1024 bits");
    const double E = std::exp2(x) - 1.0;
    const double A = (K + tau) * E / (2.0 * tau * (M - K));
    const double v = 4.0 * tau * (M - K) / ((K + tau) * (K + tau) * E);
    const double gamma = A * (1.0 + std::sqrt(1.0 + v));
    return breakdown_real(gamma, M, K, t).total() / R;
}

EEResult evaluate_ee(const DesignPoint& d, double R, const Theta& t,
                     const std::optional<PhysicalParams>& phys) {
    t.validate();
    EEResult r{};
    r.gamma_u = required_gamma_u(d, R, t.T);
    r.breakdown = breakdown_real(r.gamma_u, d.M, d.K, t);
    r.zeta = R / r.breakdown.total();
    if (phys) {
        phys->validate();
        const double w = phys->N0 * phys->B / phys->Gc;  // normalized -> Watt
        PhysicalEE ph{};
        ph.p_u_W = r.gamma_u * w;
        ph.breakdown_W = PowerBreakdown{r.breakdown.pa * w, r.breakdown.bs_rf * w,
                                        r.breakdown.mud * w, r.breakdown.circuit * w,
                                        r.breakdown.fixed * w};
        ph.p_total_W = ph.breakdown_W.total();
        ph.eta = phys->Gc * r.zeta / phys->N0;
        r.physical = ph;
    }
    return r;
}

}  // namespace mimoee
