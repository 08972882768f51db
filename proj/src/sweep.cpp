#include "mimoee/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <sstream>

#include "mimoee/ideal_csi.hpp"

namespace mimoee {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SweepRow eval_point(const Scenario& sc, double value, const SearchCaps& caps) {
    const auto [phys, R] = sc.at_point(value);
    phys.validate();
    const Theta theta = normalize(phys);
    const double eta_scale = phys.Gc / phys.N0;
    const double watt = phys.N0 * phys.B / phys.Gc;

    SweepRow row{};
    row.value = value;
    row.gc_db = linear_to_db(phys.Gc);
    row.rho_r = theta.rho_r;

    row.free_opt = optimize_integer(R, theta, caps, /*capped_k=*/false);
    row.free_eta = row.free_opt.zeta * eta_scale;
    row.free_alpha_k_pu_W = theta.alpha * row.free_opt.design.K * row.free_opt.gamma_u * watt;

    row.capped_opt = optimize_integer(R, theta, caps, /*capped_k=*/true);
    row.capped_eta = row.capped_opt.zeta * eta_scale;

    const auto [m21, k21] = sc.fixed_mk.value_or(std::make_pair(2, 1));
    row.fixed21_eta = optimize_fixed_mk(m21, k21, R, theta).zeta * eta_scale;

    if (sc.fixed_k) {
        row.fixedk_eta = optimize_fixed_k(*sc.fixed_k, R, theta, caps).zeta * eta_scale;
        row.ratio_free_over_fixedk = row.capped_eta / row.fixedk_eta;
    } else {
        row.fixedk_eta = kNaN;
        row.ratio_free_over_fixedk = kNaN;
    }

    try {
        const CsiOptimum csi = csi_optimum(R, theta);
        row.csi_eta = csi.zeta_csi * eta_scale;
        row.csi_M = csi.m_opt;
        row.csi_K = csi.k_opt;
    } catch (const std::invalid_argument&) {
        row.csi_eta = row.csi_M = row.csi_K = kNaN;
    }

    row.report = check_conditions(R, theta);

    if (row.free_opt.cap_hit.any() || row.capped_opt.cap_hit.any()) {
        std::ostringstream ss;
        ss << "search cap hit at sweep point " << sweep_variable_name(sc.sweep->variable) << " = "
           << csv_num(value) << " (M cap " << caps.m_cap << ")";
        throw CapHitError(ss.str());
    }
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const Scenario& sc, const SearchCaps& caps) {
    if (!sc.sweep) throw std::invalid_argument("run_sweep: scenario has no sweep axis");
    const int n = sc.sweep->points;
    std::vector<std::future<SweepRow>> futures;
    futures.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double v = sc.sweep->at(i);
        futures.push_back(
            std::async(std::launch::async, [&sc, v, &caps] { return eval_point(sc, v, caps); }));
    }
    std::vector<SweepRow> rows;
    rows.reserve(n);
    for (auto& f : futures) rows.push_back(f.get());
    return rows;
}

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sweep_csv_header() {
    return "variable,value,gc_db,rho_r,"
           "free_M,free_K,free_tau,free_zeta,free_eta,free_alpha_k_pu_W,"
           "cap_M,cap_K,cap_tau,cap_zeta,cap_eta,"
           "fixed21_eta,fixedk_eta,ratio_cap_over_fixedk,"
           "csi_eta,csi_M,csi_K,"
           "class,eq26_lhs,eq26_rhs,c1_value,c2_value,d1_rhs,d2_rhs,d3_rhs,k_max,c_theta,r_max";
}

std::string sweep_csv_row(const Scenario& sc, const SweepRow& r) {
    std::ostringstream s;
    s << sweep_variable_name(sc.sweep->variable) << ',' << csv_num(r.value) << ','
      << csv_num(r.gc_db) << ',' << csv_num(r.rho_r) << ',' << r.free_opt.design.M << ','
      << r.free_opt.design.K << ',' << r.free_opt.design.tau << ',' << csv_num(r.free_opt.zeta)
      << ',' << csv_num(r.free_eta) << ',' << csv_num(r.free_alpha_k_pu_W) << ','
      << r.capped_opt.design.M << ',' << r.capped_opt.design.K << ',' << r.capped_opt.design.tau
      << ',' << csv_num(r.capped_opt.zeta) << ',' << csv_num(r.capped_eta) << ','
      << csv_num(r.fixed21_eta) << ',' << csv_num(r.fixedk_eta) << ','
      << csv_num(r.ratio_free_over_fixedk) << ',' << csv_num(r.csi_eta) << ','
      << csv_num(r.csi_M) << ',' << csv_num(r.csi_K) << ','
      << regime_name(r.report.classification) << ','
      << csv_num(r.report.nonmassive_condition.lhs) << ','
      << csv_num(r.report.nonmassive_condition.rhs) << ',' << csv_num(r.report.c1.value) << ','
      << csv_num(r.report.c2.value) << ',' << csv_num(r.report.d1.rhs) << ','
      << csv_num(r.report.d2.rhs) << ',' << csv_num(r.report.d3.rhs) << ','
      << csv_num(r.report.k_max) << ',' << csv_num(r.report.c_theta) << ','
      << csv_num(r.report.r_max);
    return s.str();
}

}  // namespace mimoee
