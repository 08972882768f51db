#pragma once

#include <cstdint>
#include <optional>

namespace mimoee {

/// Unnormalized hardware/channel constants in SI units.
struct PhysicalParams {
    double N0;     ///< noise power spectral density (W/Hz)
    double B;      ///< bandwidth (Hz)
    double Tc;     ///< coherence time (s)
    double Gc;     ///< linear channel power gain (dimensionless)
    double alpha;  ///< PA inefficiency, consumed/radiated (> 1)
    double p_r;    ///< per-BS-antenna receiver power (W)
    double p_d;    ///< per-user circuit + decode power, p_t + p_dec (W)
    double p_s;    ///< fixed overhead power (W)
    double C0;     ///< energy per complex operation (J)

    /// Throws std::invalid_argument if any field is out of range.
    void validate() const;
};

/// Dimensionless system parameters; every analytical result runs on these.
struct Theta {
    double alpha;
    double rho_r;
    double rho_d;
    double rho_s;
    double rho_0;
    double T;  ///< channel uses per coherence interval, B*Tc (real-valued)

    void validate() const;
};

/// Candidate (M, K, tau) configuration. tau counts pilot channel uses.
struct DesignPoint {
    int M;    ///< BS antennas, >= K + 1
    int K;    ///< user terminals, >= 1
    int tau;  ///< pilot length, K <= tau < T

    /// Validates against the coherence interval length T.
    void validate(double T) const;
};

/// Normalized power breakdown; each entry is a summand of R/zeta.
struct PowerBreakdown {
    double pa;       ///< alpha*K*gamma_u
    double bs_rf;    ///< M*rho_r
    double mud;      ///< all rho_0 (compute) terms
    double circuit;  ///< K*rho_d
    double fixed;    ///< rho_s

    double total() const { return pa + bs_rf + mud + circuit + fixed; }
};

/// Unnormalized outputs, produced only when PhysicalParams are supplied.
struct PhysicalEE {
    double p_u_W;        ///< radiated power per UT
    double p_total_W;    ///< total consumed power (Watt)
    double eta;          ///< EE in bits/J, = (Gc/N0)*zeta
    PowerBreakdown breakdown_W;  ///< same split in Watt
};

struct EEResult {
    double gamma_u;  ///< required per-user SNR
    double zeta;     ///< normalized EE
    PowerBreakdown breakdown;  ///< normalized, sums to R/zeta
    std::optional<PhysicalEE> physical;
};

/// Complex-operation counts per coherence interval (Table rows).
struct OpCounts {
    double chest;          ///< A.1: channel estimate, 2*M*K*tau
    double gram;           ///< A.2.1: Hhat^H * Hhat, 2*M*K^2
    double inverse;        ///< A.2.2: K x K inversion, 8*K^3/3
    double pinv_mult;      ///< A.2.3: B * Hhat^H, 2*M*K^2
    double pseudo_inverse; ///< A.2 = A.2.1 + A.2.2 + A.2.3
    double estimation_phase;  ///< A = A.1 + A.2
    double data_phase;        ///< B: 2*M*K*(T - tau)
    double total;             ///< C = A + B
};

/// Watt-level split of the channel-estimation/detection compute power.
struct MudPower {
    double total_W;
    double est_W;   ///< 2*M*K*C0*B term
    double gram_W;  ///< 4*M*K^2*C0/Tc term
    double inv_W;   ///< 8*K^3*C0/(3*Tc) term
    OpCounts ops;
};

double db_to_linear(double db);
double linear_to_db(double x);

/// rho_x = Gc*p_x/(N0*B) for x in {r,d,s}; rho_0 = Gc*C0/N0; T = B*Tc.
Theta normalize(const PhysicalParams& p);

/// Inverse of normalize at fixed (N0, B, Gc).
PhysicalParams denormalize(const Theta& t, double N0, double B, double Gc);

/// Spectral efficiency achieved by a ZF receiver with MMSE channel estimates
/// at per-user SNR gamma_u (bits/s/Hz, summed over users). gamma_u >= 0.
double achievable_rate(double gamma_u, const DesignPoint& d, double T);

/// Per-user SNR required to reach sum spectral efficiency R, from the positive
/// root of the rate equation's quadratic. Throws on domain violations or when
/// the per-user exponent R/(K(1 - tau/T)) exceeds 1024.
double required_gamma_u(const DesignPoint& d, double R, double T);

/// Closed-form upper bound on required_gamma_u; strictly greater on any
/// valid input.
double gamma_u_upper_bound(const DesignPoint& d, double R, double T);

/// The discriminant ratio v = 4*tau*(M-K) / ((K+tau)^2 * (2^x - 1)); the
/// bound above is exact up to sqrt(1+v) <= 1 + v/2.
double gamma_u_bound_slack_v(const DesignPoint& d, double R, double T);

/// Complex-operation counts for channel estimation + ZF detection.
OpCounts op_count(int M, int K, int tau, double T);

/// Average compute power for channel estimation and multiuser detection.
MudPower mud_power(int M, int K, const PhysicalParams& p);

/// R/zeta as a function of real-valued (M, K, tau); the relaxed-problem
/// objective. Requires M > K >= 1, K <= tau < T.
double inv_zeta_real(double M, double K, double tau, double R, const Theta& t);

/// Same split as evaluate_ee for real-valued design variables.
PowerBreakdown breakdown_real(double gamma_u, double M, double K, const Theta& t);

/// Normalized EE of a design point, with power breakdown; physical outputs
/// when PhysicalParams are supplied.
EEResult evaluate_ee(const DesignPoint& d, double R, const Theta& t,
                     const std::optional<PhysicalParams>& phys = std::nullopt);

}  // namespace mimoee
