#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "mimoee/physics.hpp"

namespace mimoee {

/// Link-level simulation settings. gamma_u is the normalized per-user SNR
/// Gc*p_u/(N0*B); the simulation runs in Gc = 1 units.
struct SimConfig {
    int M;
    int K;
    int tau;
    double T;
    double gamma_u;
    int replicates;
    std::uint64_t seed;

    void validate() const;
};

struct SimOutcome {
    double empirical_rate;    ///< bits/s/Hz, mean over replicates
    double rate_stderr;       ///< standard error of the mean
    double analytical_bound;  ///< closed-form lower bound at the same config
    double per_user_sinr;     ///< mean post-detection SINR
    double channel_mse;       ///< mean per-entry |G - Ghat|^2 (unit-variance channel)
    double estimate_var;      ///< mean per-entry |Ghat|^2; MMSE predicts tg/(1+tg)
    std::int64_t redraws;     ///< replicates regenerated due to a singular Gram matrix
};

using CMatrix = Eigen::MatrixXcd;

/// One replicate's raw matrices, exposed for validation against hand
/// computations.
struct SimReplicate {
    CMatrix G;     ///< true channel, M x K, CN(0,1) entries
    CMatrix Ghat;  ///< MMSE estimate from the pilot phase
    std::vector<double> sinr;  ///< measured post-detection SINR per user
    double rate;   ///< (1 - tau/T) * sum_k log2(1 + sinr_k)
    int redraws;
};

/// Orthonormal pilot matrix (K rows of a tau-point DFT basis).
CMatrix pilot_matrix(int K, int tau);

/// Runs one replicate with the stream derived from (seed, index).
SimReplicate simulate_replicate(const SimConfig& cfg, int index);

/// Full Monte-Carlo run; deterministic for a given config.
SimOutcome simulate(const SimConfig& cfg);

}  // namespace mimoee
