#include "mimoee/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace mimoee {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Streams of CN(0,1) entries; one independent stream per replicate.
struct GaussianStream {
    std::mt19937_64 rng;
    std::normal_distribution<double> norm{0.0, std::numbers::sqrt2 / 2.0};

    explicit GaussianStream(std::uint64_t s) : rng(s) {}
    std::complex<double> operator()() { return {norm(rng), norm(rng)}; }

    CMatrix matrix(int rows, int cols) {
        CMatrix m(rows, cols);
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) m(r, c) = (*this)();
        return m;
    }
};

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

void SimConfig::validate() const {
    if (K < 1) throw std::invalid_argument("SimConfig: K must be >= 1");
    if (M < K + 1) throw std::invalid_argument("SimConfig: M must be >= K + 1");
    if (tau < K) throw std::invalid_argument("SimConfig: tau must be >= K");
    if (!(static_cast<double>(tau) < T)) throw std::invalid_argument("SimConfig: tau must be < T");
    if (!(gamma_u > 0.0)) throw std::invalid_argument("SimConfig: gamma_u must be > 0");
    if (replicates < 1) throw std::invalid_argument("SimConfig: replicates must be >= 1");
}

CMatrix pilot_matrix(int K, int tau) {
    CMatrix phi(K, tau);
    const double scale = 1.0 / std::sqrt(static_cast<double>(tau));
    for (int k = 0; k < K; ++k)
        for (int t = 0; t < tau; ++t) {
            const double ang = -2.0 * std::numbers::pi * k * t / tau;
            phi(k, t) = scale * std::complex<double>(std::cos(ang), std::sin(ang));
        }
    return phi;
}

SimReplicate simulate_replicate(const SimConfig& cfg, int index) {
    cfg.validate();
    GaussianStream gs(splitmix64(cfg.seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
    const double g = cfg.gamma_u;
    const int n_data = static_cast<int>(std::llround(cfg.T)) - cfg.tau;
    const CMatrix phi = pilot_matrix(cfg.K, cfg.tau);
    const double mmse_gain = std::sqrt(cfg.tau * g) / (1.0 + cfg.tau * g);

    SimReplicate rep;
    rep.redraws = 0;
    CMatrix det;  // K x M ZF detector on the estimate
    for (;;) {
        rep.G = gs.matrix(cfg.M, cfg.K);
        const CMatrix noise_p = gs.matrix(cfg.M, cfg.tau);
        const CMatrix yp = std::sqrt(cfg.tau * g) * rep.G * phi + noise_p;
        rep.Ghat = mmse_gain * yp * phi.adjoint();

        const CMatrix gram = rep.Ghat.adjoint() * rep.Ghat;
        Eigen::FullPivLU<CMatrix> lu(gram);
        if (lu.isInvertible()) {
            det = lu.inverse() * rep.Ghat.adjoint();
            break;
        }
        if (++rep.redraws > 64)
            throw std::runtime_error("simulate_replicate: persistent singular Gram matrix");
    }

    // Data phase: y = sqrt(g) G x + n, xhat = Ghat^dagger G x + Ghat^dagger n / sqrt(g)
    const CMatrix x = gs.matrix(cfg.K, n_data);
    const CMatrix noise = gs.matrix(cfg.M, n_data);
    const CMatrix y = std::sqrt(g) * rep.G * x + noise;
    const CMatrix xhat = det * y / std::sqrt(g);

    rep.sinr.resize(cfg.K);
    rep.rate = 0.0;
    for (int k = 0; k < cfg.K; ++k) {
        // least-squares effective gain, then residual power as noise
        std::complex<double> num = 0.0;
        double den = 0.0;
        for (int t = 0; t < n_data; ++t) {
            num += xhat(k, t) * std::conj(x(k, t));
            den += std::norm(x(k, t));
        }
        const std::complex<double> gain = num / den;
        double resid = 0.0;
        for (int t = 0; t < n_data; ++t) resid += std::norm(xhat(k, t) - gain * x(k, t));
        resid /= n_data;
        const double sig = std::norm(gain) * den / n_data;
        rep.sinr[k] = sig / resid;
        rep.rate += std::log2(1.0 + rep.sinr[k]);
    }
    rep.rate *= 1.0 - cfg.tau / cfg.T;
    return rep;
}

SimOutcome simulate(const SimConfig& cfg) {
    cfg.validate();
    KahanSum rate, rate2, sinr, mse, evar;
    std::int64_t redraws = 0;
    const int n = cfg.replicates;
    for (int i = 0; i < n; ++i) {
        const SimReplicate rep = simulate_replicate(cfg, i);
        rate.add(rep.rate);
        rate2.add(rep.rate * rep.rate);
        for (double s : rep.sinr) sinr.add(s / cfg.K);
        const double cells = static_cast<double>(cfg.M) * cfg.K;
        mse.add((rep.G - rep.Ghat).squaredNorm() / cells);
        evar.add(rep.Ghat.squaredNorm() / cells);
        redraws += rep.redraws;
    }

    SimOutcome out{};
    out.empirical_rate = rate.sum / n;
    const double var = (n > 1) ? (rate2.sum - n * out.empirical_rate * out.empirical_rate) /
                                     (n - 1)
                               : 0.0;
    out.rate_stderr = std::sqrt(std::max(var, 0.0) / n);
    out.per_user_sinr = sinr.sum / n;
    out.channel_mse = mse.sum / n;
    out.estimate_var = evar.sum / n;
    out.redraws = redraws;
    out.analytical_bound =
        achievable_rate(cfg.gamma_u, DesignPoint{cfg.M, cfg.K, cfg.tau}, cfg.T);
    return out;
}

}  // namespace mimoee
