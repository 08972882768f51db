#pragma once

#include <string>
#include <vector>

#include "mimoee/optimizer.hpp"
#include "mimoee/regime.hpp"
#include "mimoee/scenario.hpp"

namespace mimoee {

/// Thrown when an optimizer touches a search cap during a sweep.
class CapHitError : public std::runtime_error {
public:
    explicit CapHitError(const std::string& what) : std::runtime_error(what) {}
};

/// One evaluated sweep point. NaN columns mean "not applicable here"
/// (e.g. ideal-CSI closed form outside its preconditions).
struct SweepRow {
    double value;
    double gc_db;
    Optimum free_opt;
    double free_eta;
    double free_alpha_k_pu_W;
    Optimum capped_opt;
    double capped_eta;
    double fixed21_eta;
    double fixedk_eta;
    double ratio_free_over_fixedk;
    double csi_eta;
    double csi_M;
    double csi_K;
    RegimeReport report;
    double rho_r;
};

/// Evaluates every sweep point (concurrently; rows returned in axis order).
std::vector<SweepRow> run_sweep(const Scenario& sc, const SearchCaps& caps = {});

/// Fixed 17-significant-digit, C-locale number formatting used for all CSV.
std::string csv_num(double v);

std::string sweep_csv_header();
std::string sweep_csv_row(const Scenario& sc, const SweepRow& r);

}  // namespace mimoee
