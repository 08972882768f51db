#include "mimoee/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mimoee/ideal_csi.hpp"
#include "mimoee/regime.hpp"

namespace mimoee {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Per-(K, tau) slice of the objective: inv(M) = alpha*K*gamma_u(M) + c0 + cM*M.
struct Slice {
    double E;    // 2^{R/(K(1-tau/T))} - 1
    double ktau; // K + tau
    double tau;
    double aK;   // alpha * K
    double c0;   // tau/M-independent power terms
    double cM;   // per-antenna power terms
    std::int64_t* evals;

    double gamma(double M, double K) const {
        const double m = M - K;
        const double A = ktau * E / (2.0 * tau * m);
        const double v = 4.0 * tau * m / (ktau * ktau * E);
        return A * (1.0 + std::sqrt(1.0 + v));
    }
    double operator()(double M, double K) const {
        ++*evals;
        return aK * gamma(M, K) + c0 + cM * M;
    }
};

Slice make_slice(int K, double tau, double R, const Theta& t, std::int64_t* evals) {
    const double x = R / (K * (1.0 - tau / t.T));
    Slice s{};
    s.E = (x > 1024.0) ? kInf : std::exp2(x) - 1.0;
    s.ktau = K + tau;
    s.tau = tau;
    s.aK = t.alpha * K;
    s.c0 = t.rho_s + K * (t.rho_d + (8.0 / 3.0) * K * K * t.rho_0 / t.T);
    s.cM = t.rho_r + 2.0 * K * t.rho_0 + 4.0 * K * K * t.rho_0 / t.T;
    s.evals = evals;
    return s;
}

/// Integer minimizer of a convex slice over [m_lo, m_hi]; returns the
/// smallest minimizer. Falls back to a linear scan if the convexity
/// assumption ever fails numerically.
int min_over_m(const Slice& s, int K, int m_lo, int m_hi) {
    int lo = m_lo, hi = m_hi;
    while (hi - lo > 3) {
        const int m1 = lo + (hi - lo) / 3;
        const int m2 = hi - (hi - lo) / 3;
        if (s(m1, K) < s(m2, K))
            hi = m2 - 1;
        else
            lo = m1 + 1;
    }
    int best = lo;
    double fbest = s(lo, K);
    for (int m = lo + 1; m <= hi; ++m) {
        const double f = s(m, K);
        if (f < fbest) {
            fbest = f;
            best = m;
        }
    }
    // ternary-bracket sanity: the result must beat its neighbors
    if ((best > m_lo && s(best - 1, K) < fbest) || (best < m_hi && s(best + 1, K) < fbest)) {
        best = m_lo;
        fbest = s(m_lo, K);
        for (int m = m_lo + 1; m <= m_hi; ++m) {
            const double f = s(m, K);
            if (f < fbest) {
                fbest = f;
                best = m;
            }
        }
    }
    while (best > m_lo && s(best - 1, K) <= fbest) --best;  // smallest minimizer on ties
    return best;
}

struct Candidate {
    double inv = kInf;
    DesignPoint d{};
    double gamma = 0.0;
};

/// Lexicographic (K, M, tau) preference on exact objective ties.
bool better(const Candidate& a, const Candidate& b) {
    if (a.inv != b.inv) return a.inv < b.inv;
    if (a.d.K != b.d.K) return a.d.K < b.d.K;
    if (a.d.M != b.d.M) return a.d.M < b.d.M;
    return a.d.tau < b.d.tau;
}

int derive_tau_max(double T) {
    const int tmax = static_cast<int>(std::ceil(T)) - 1;
    return (static_cast<double>(tmax) < T) ? tmax : tmax - 1;
}

Optimum finish(const Candidate& c, double R, const Theta& t, std::int64_t evals) {
    if (!std::isfinite(c.inv))
        throw std::invalid_argument("optimize: empty feasible set");
    Optimum o;
    o.design = c.d;
    o.zeta = evaluate_ee(c.d, R, t).zeta;
    o.gamma_u = c.gamma;
    o.evaluations = evals;
    return o;
}

/// Deterministic golden-section minimizer; assumes unimodality on [a, b].
double golden_min(const std::function<double(double)>& f, double a, double b,
                  std::int64_t* evals) {
    constexpr double phi = 0.6180339887498949;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    *evals += 2;
    for (int it = 0; it < 200 && (b - a) > 1e-12 * (std::abs(a) + std::abs(b) + 1.0); ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
        ++*evals;
    }
    return 0.5 * (a + b);
}

/// Coarse grid then golden refinement, for coordinates where unimodality
/// is not guaranteed analytically.
double grid_then_golden(const std::function<double(double)>& f, double a, double b,
                        std::int64_t* evals) {
    if (!(b > a)) return a;
    constexpr int n = 32;
    int ibest = 0;
    double fbest = kInf;
    for (int i = 0; i <= n; ++i) {
        const double x = a + (b - a) * i / n;
        const double fx = f(x);
        ++*evals;
        if (fx < fbest) {
            fbest = fx;
            ibest = i;
        }
    }
    const double lo = a + (b - a) * std::max(0, ibest - 1) / n;
    const double hi = a + (b - a) * std::min(n, ibest + 1) / n;
    return golden_min(f, lo, hi, evals);
}

}  // namespace

Optimum optimize_integer(double R, const Theta& t, const SearchCaps& caps, bool capped_k) {
    t.validate();
    if (!(R > 0.0)) throw std::invalid_argument("optimize_integer: R must be > 0");
    const int tau_max = derive_tau_max(t.T);
    // K <= tau < T bounds K structurally; K_max is the deliberate restriction
    // of capped mode; only an explicit caps.k_cap below both counts as a cap.
    const int k_struct = std::min(static_cast<int>(std::floor(t.T)) - 1, tau_max);
    const bool user_k_cap = caps.k_cap > 0;
    int k_cap = k_struct;
    if (user_k_cap) k_cap = std::min(caps.k_cap, k_struct);
    else if (capped_k) k_cap = std::min(static_cast<int>(std::floor(k_max(t))), k_struct);
    if (k_cap < 1 || tau_max < 1 || caps.m_cap < 2)
        throw std::invalid_argument("optimize_integer: empty feasible set");

    std::int64_t evals = 0;
    Candidate best;
    for (int K = 1; K <= k_cap; ++K) {
        if (caps.m_cap < K + 1) break;
        // M- and tau-independent floor of the objective for this K; the
        // floor grows with K, so once it passes the incumbent no larger K
        // can win.
        const Slice probe = make_slice(K, K, R, t, &evals);
        const double floor_k = probe.c0 + (K + 1.0) * probe.cM;
        if (floor_k >= best.inv) break;
        for (int tau = K; tau <= tau_max; ++tau) {
            const Slice s = make_slice(K, tau, R, t, &evals);
            if (!std::isfinite(s.E)) continue;
            const int m = min_over_m(s, K, K + 1, caps.m_cap);
            Candidate c{s(m, K), DesignPoint{m, K, tau}, s.gamma(m, K)};
            if (better(c, best)) best = c;
        }
    }
    Optimum o = finish(best, R, t, evals);
    o.cap_hit.m = (o.design.M == caps.m_cap);
    o.cap_hit.k = !capped_k && (o.design.K == k_cap);
    return o;
}

Optimum optimize_fixed_mk(int M, int K, double R, const Theta& t) {
    t.validate();
    if (!(R > 0.0)) throw std::invalid_argument("optimize_fixed_mk: R must be > 0");
    if (M < K + 1 || K < 1) throw std::invalid_argument("optimize_fixed_mk: need M >= K+1");
    const int tau_max = derive_tau_max(t.T);
    std::int64_t evals = 0;
    Candidate best;
    for (int tau = K; tau <= tau_max; ++tau) {
        const Slice s = make_slice(K, tau, R, t, &evals);
        if (!std::isfinite(s.E)) continue;
        Candidate c{s(M, K), DesignPoint{M, K, tau}, s.gamma(M, K)};
        if (better(c, best)) best = c;
    }
    return finish(best, R, t, evals);
}

Optimum optimize_fixed_k(int K, double R, const Theta& t, const SearchCaps& caps) {
    t.validate();
    if (!(R > 0.0)) throw std::invalid_argument("optimize_fixed_k: R must be > 0");
    if (K < 1) throw std::invalid_argument("optimize_fixed_k: K must be >= 1");
    const int tau_max = derive_tau_max(t.T);
    if (K > tau_max || caps.m_cap < K + 1)
        throw std::invalid_argument("optimize_fixed_k: empty feasible set");
    std::int64_t evals = 0;
    Candidate best;
    for (int tau = K; tau <= tau_max; ++tau) {
        const Slice s = make_slice(K, tau, R, t, &evals);
        if (!std::isfinite(s.E)) continue;
        const int m = min_over_m(s, K, K + 1, caps.m_cap);
        Candidate c{s(m, K), DesignPoint{m, K, tau}, s.gamma(m, K)};
        if (better(c, best)) best = c;
    }
    Optimum o = finish(best, R, t, evals);
    o.cap_hit.m = (o.design.M == caps.m_cap);
    return o;
}

namespace {

struct RelaxedState {
    double M, K, tau;
};

double relaxed_obj(const RelaxedState& s, double R, const Theta& t, std::int64_t* evals) {
    ++*evals;
    if (!(s.K >= 1.0 && s.M > s.K && s.tau >= s.K && s.tau < t.T)) return kInf;
    const double x = R / (s.K * (1.0 - s.tau / t.T));
    if (x > 1024.0) return kInf;
    const double E = std::exp2(x) - 1.0;
    const double m = s.M - s.K;
    const double A = (s.K + s.tau) * E / (2.0 * s.tau * m);
    const double v = 4.0 * s.tau * m / ((s.K + s.tau) * (s.K + s.tau) * E);
    const double gamma = A * (1.0 + std::sqrt(1.0 + v));
    return breakdown_real(gamma, s.M, s.K, t).total() / R;
}

RelaxedOptimum descend(RelaxedState s, double R, const Theta& t, double kmax) {
    std::int64_t evals = 0;
    const double tau_hi = t.T * (1.0 - 1e-9);
    double prev = relaxed_obj(s, R, t, &evals);
    bool converged = false;
    for (int sweep = 0; sweep < 300; ++sweep) {
        // M: provably unimodal; expand the bracket outward first
        {
            const double lo = s.K * (1.0 + 1e-12) + 1e-12;
            double hi = s.K + 2.0 * std::max(s.M - s.K, 1.0);
            auto f = [&](double M) { return relaxed_obj({M, s.K, s.tau}, R, t, &evals); };
            while (f(s.K + 2.0 * (hi - s.K)) < f(hi) && hi < 1e12) hi = s.K + 2.0 * (hi - s.K);
            s.M = golden_min(f, lo, s.K + 2.0 * (hi - s.K), &evals);
        }
        // tau
        {
            auto f = [&](double tau) { return relaxed_obj({s.M, s.K, tau}, R, t, &evals); };
            s.tau = grid_then_golden(f, s.K, tau_hi, &evals);
        }
        // K, honoring K <= tau, K < M, K <= K_max
        {
            const double hi = std::min({kmax, s.tau, s.M * (1.0 - 1e-12)});
            auto f = [&](double K) { return relaxed_obj({s.M, K, s.tau}, R, t, &evals); };
            if (hi > 1.0) s.K = grid_then_golden(f, 1.0, hi, &evals);
        }
        const double cur = relaxed_obj(s, R, t, &evals);
        if (std::abs(prev - cur) <= 1e-10 * std::abs(cur)) {
            converged = true;
            prev = cur;
            break;
        }
        prev = cur;
    }
    RelaxedOptimum out;
    out.M = s.M;
    out.K = s.K;
    out.tau = s.tau;
    out.zeta = 1.0 / prev;
    out.converged = converged;
    out.evaluations = evals;
    return out;
}

}  // namespace

RelaxedOptimum optimize_relaxed(double R, const Theta& t) {
    t.validate();
    if (!(R > 0.0)) throw std::invalid_argument("optimize_relaxed: R must be > 0");
    const double kmax = k_max(t);

    const Optimum seed_int = optimize_integer(R, t, {}, /*capped_k=*/true);
    RelaxedOptimum best = descend({static_cast<double>(seed_int.design.M),
                                   static_cast<double>(seed_int.design.K),
                                   static_cast<double>(seed_int.design.tau)},
                                  R, t, kmax);

    const CsiOptimum csi = csi_optimum(R, t);
    const double tau0 = std::min(std::max(kmax, csi.k_opt), t.T * (1.0 - 1e-9));
    RelaxedOptimum alt =
        descend({std::max(csi.m_opt, csi.k_opt * (1.0 + 1e-9) + 1e-9), csi.k_opt, tau0}, R, t,
                kmax);
    if (alt.zeta > best.zeta) {
        alt.evaluations += best.evaluations;
        best = alt;
    } else {
        best.evaluations += alt.evaluations;
    }
    // relaxation can only match or improve on the capped integer optimum
    if (best.zeta < seed_int.zeta) {
        best.M = seed_int.design.M;
        best.K = seed_int.design.K;
        best.tau = seed_int.design.tau;
        best.zeta = seed_int.zeta;
    }
    return best;
}

RelaxedOptimum optimize_relaxed_fixed_k(double K, double R, const Theta& t) {
    t.validate();
    if (!(R > 0.0 && K >= 1.0 && K < t.T))
        throw std::invalid_argument("optimize_relaxed_fixed_k: need R > 0, 1 <= K < T");
    std::int64_t evals = 0;
    const double tau_hi = t.T * (1.0 - 1e-9);
    RelaxedState s{csi_m_given_k(K, R, t), K, std::min(std::max(2.0 * K, 16.0), tau_hi)};
    double prev = relaxed_obj(s, R, t, &evals);
    bool converged = false;
    for (int sweep = 0; sweep < 300; ++sweep) {
        {
            const double lo = K * (1.0 + 1e-12) + 1e-12;
            double hi = K + 2.0 * std::max(s.M - K, 1.0);
            auto f = [&](double M) { return relaxed_obj({M, K, s.tau}, R, t, &evals); };
            while (f(K + 2.0 * (hi - K)) < f(hi) && hi < 1e12) hi = K + 2.0 * (hi - K);
            s.M = golden_min(f, lo, K + 2.0 * (hi - K), &evals);
        }
        {
            auto f = [&](double tau) { return relaxed_obj({s.M, K, tau}, R, t, &evals); };
            s.tau = grid_then_golden(f, K, tau_hi, &evals);
        }
        const double cur = relaxed_obj(s, R, t, &evals);
        if (std::abs(prev - cur) <= 1e-10 * std::abs(cur)) {
            converged = true;
            prev = cur;
            break;
        }
        prev = cur;
    }
    RelaxedOptimum out;
    out.M = s.M;
    out.K = K;
    out.tau = s.tau;
    out.zeta = 1.0 / prev;
    out.converged = converged;
    out.evaluations = evals;
    return out;
}

}  // namespace mimoee
