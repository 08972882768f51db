#include "mimoee/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "mimoee/ideal_csi.hpp"
#include "mimoee/montecarlo.hpp"
#include "mimoee/optimizer.hpp"
#include "mimoee/presets.hpp"
#include "mimoee/sweep.hpp"

namespace mimoee {

namespace {

struct CommonOpts {
    std::string scenario_path;
    std::string preset;
    std::string out_path;
    std::uint64_t seed = 12345;
    bool capped_k = false;
    std::string fixed_mk;
    std::string fixed_k;
    int m_cap = 4096;
};

Scenario resolve_scenario(const CommonOpts& o) {
    if (!o.preset.empty() && !o.scenario_path.empty())
        throw std::invalid_argument("give either --scenario or --preset, not both");
    if (o.preset.empty() && o.scenario_path.empty())
        throw std::invalid_argument("--scenario or --preset is required");
    Scenario sc =
        o.preset.empty() ? load_scenario(o.scenario_path) : preset_scenario(o.preset);
    if (o.capped_k) sc.capped_k = true;
    if (!o.fixed_k.empty()) sc.fixed_k = std::stoi(o.fixed_k);
    if (!o.fixed_mk.empty()) {
        const auto comma = o.fixed_mk.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--fixed-mk expects M,K");
        sc.fixed_mk = {std::stoi(o.fixed_mk.substr(0, comma)),
                       std::stoi(o.fixed_mk.substr(comma + 1))};
    }
    return sc;
}

DesignPoint parse_design(const std::string& s) {
    int m = 0, k = 0, tau = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> m >> c1 >> k >> c2 >> tau) || c1 != ',' || c2 != ',')
        throw std::invalid_argument("--design expects M,K,tau");
    return DesignPoint{m, k, tau};
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--scenario", o.scenario_path, "scenario file (key = value lines)");
    cmd->add_option("--preset", o.preset, "built-in scenario: fig1|fig4|fig5");
    cmd->add_option("--out", o.out_path, "output file (default stdout)");
}

int run_eval(const CommonOpts& o, const std::string& design_str, double rate_override,
             std::ostream& out) {
    const Scenario sc = resolve_scenario(o);
    const DesignPoint d = parse_design(design_str);
    const auto [phys, sc_rate] = sc.resolved();
    const double R = rate_override > 0.0 ? rate_override : sc_rate;
    const Theta theta = normalize(phys);
    const EEResult r = evaluate_ee(d, R, theta, phys);
    out << "M,K,tau,R,gamma_u,p_u_W,P_total_W,eta_bits_per_J,zeta,"
           "pa_W,bs_rf_W,mud_W,circuit_W,fixed_W\n";
    const PhysicalEE& ph = *r.physical;
    out << d.M << ',' << d.K << ',' << d.tau << ',' << csv_num(R) << ',' << csv_num(r.gamma_u)
        << ',' << csv_num(ph.p_u_W) << ',' << csv_num(ph.p_total_W) << ',' << csv_num(ph.eta)
        << ',' << csv_num(r.zeta) << ',' << csv_num(ph.breakdown_W.pa) << ','
        << csv_num(ph.breakdown_W.bs_rf) << ',' << csv_num(ph.breakdown_W.mud) << ','
        << csv_num(ph.breakdown_W.circuit) << ',' << csv_num(ph.breakdown_W.fixed) << '\n';
    return kOk;
}

int run_optimize(const CommonOpts& o, std::ostream& out) {
    const Scenario sc = resolve_scenario(o);
    const auto [phys, R] = sc.resolved();
    const Theta theta = normalize(phys);
    const double eta_scale = phys.Gc / phys.N0;
    const double watt = phys.N0 * phys.B / phys.Gc;
    const SearchCaps caps{o.m_cap, 0};

    std::string mode = "free";
    Optimum opt;
    if (sc.fixed_mk) {
        mode = "fixed_mk";
        opt = optimize_fixed_mk(sc.fixed_mk->first, sc.fixed_mk->second, R, theta);
    } else if (sc.fixed_k) {
        mode = "fixed_k";
        opt = optimize_fixed_k(*sc.fixed_k, R, theta, caps);
    } else {
        mode = sc.capped_k ? "capped" : "free";
        opt = optimize_integer(R, theta, caps, sc.capped_k);
    }
    out << "mode,M,K,tau,R,zeta,eta_bits_per_J,gamma_u,p_u_W,alpha_k_pu_W,evaluations,cap_hit\n";
    out << mode << ',' << opt.design.M << ',' << opt.design.K << ',' << opt.design.tau << ','
        << csv_num(R) << ',' << csv_num(opt.zeta) << ',' << csv_num(opt.zeta * eta_scale)
        << ',' << csv_num(opt.gamma_u) << ',' << csv_num(opt.gamma_u * watt) << ','
        << csv_num(theta.alpha * opt.design.K * opt.gamma_u * watt) << ',' << opt.evaluations
        << ',' << (opt.cap_hit.any() ? 1 : 0) << '\n';
    return opt.cap_hit.any() ? kCapHit : kOk;
}

int run_classify(const CommonOpts& o, double rate_override, std::ostream& out) {
    const Scenario sc = resolve_scenario(o);
    const auto [phys, sc_rate] = sc.resolved();
    const double R = rate_override > 0.0 ? rate_override : sc_rate;
    const Theta theta = normalize(phys);
    const RegimeReport rep = check_conditions(R, theta);

    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "classification: " << regime_name(rep.classification) << '\n';
    out << "single-user condition: lhs=" << csv_num(rep.nonmassive_condition.lhs)
        << " rhs=" << csv_num(rep.nonmassive_condition.rhs) << " satisfied="
        << yn(rep.nonmassive_condition.satisfied) << '\n';
    out << "C.1: min(T/4, rho_r/3rho_0, 3rho_d/2rho_0)=" << csv_num(rep.c1.value)
        << " > 10: " << yn(rep.c1.satisfied) << '\n';
    out << "C.2: rho_s/alpha=" << csv_num(rep.c2.value) << " > 1/2: " << yn(rep.c2.satisfied)
        << '\n';
    out << "D.1: rho_r=" << csv_num(rep.d1.lhs) << " > " << csv_num(rep.d1.rhs) << ": "
        << yn(rep.d1.satisfied) << '\n';
    out << "D.2: rho_r > " << csv_num(rep.d2.rhs) << ": " << yn(rep.d2.satisfied) << '\n';
    out << "D.3: rho_r < " << csv_num(rep.d3.rhs) << ": " << yn(rep.d3.satisfied) << '\n';
    out << "K_max=" << csv_num(rep.k_max) << " c_theta=" << csv_num(rep.c_theta)
        << " R_max=" << csv_num(rep.r_max) << '\n';
    out << "lemma3_agree=" << yn(rep.lemma3_agree)
        << " lemma2_sampled_ok=" << yn(rep.lemma2_sampled_ok) << '\n';

    out << "class,eq26_lhs,eq26_rhs,eq26_sat,c1_value,c1_sat,c2_value,c2_sat,"
           "d1_rhs,d1_sat,d2_rhs,d2_sat,d3_rhs,d3_sat,k_max,c_theta,r_max\n";
    out << regime_name(rep.classification) << ',' << csv_num(rep.nonmassive_condition.lhs) << ','
        << csv_num(rep.nonmassive_condition.rhs) << ',' << rep.nonmassive_condition.satisfied
        << ',' << csv_num(rep.c1.value) << ',' << rep.c1.satisfied << ','
        << csv_num(rep.c2.value) << ',' << rep.c2.satisfied << ',' << csv_num(rep.d1.rhs) << ','
        << rep.d1.satisfied << ',' << csv_num(rep.d2.rhs) << ',' << rep.d2.satisfied << ','
        << csv_num(rep.d3.rhs) << ',' << rep.d3.satisfied << ',' << csv_num(rep.k_max) << ','
        << csv_num(rep.c_theta) << ',' << csv_num(rep.r_max) << '\n';
    return kOk;
}

int run_sweep_cmd(const CommonOpts& o, std::ostream& out) {
    const Scenario sc = resolve_scenario(o);
    const std::vector<SweepRow> rows = run_sweep(sc, SearchCaps{o.m_cap, 0});
    out << sweep_csv_header() << '\n';
    for (const SweepRow& r : rows) out << sweep_csv_row(sc, r) << '\n';
    return kOk;
}

int run_mc_validate(const CommonOpts& o, const std::string& design_str, double rate_override,
                    int replicates, std::ostream& out) {
    const Scenario sc = resolve_scenario(o);
    const DesignPoint d = parse_design(design_str);
    const auto [phys, sc_rate] = sc.resolved();
    const double R = rate_override > 0.0 ? rate_override : sc_rate;
    const Theta theta = normalize(phys);
    const double gamma = required_gamma_u(d, R, theta.T);

    SimConfig cfg{d.M, d.K, d.tau, theta.T, gamma, replicates, o.seed};
    const SimOutcome res = simulate(cfg);

    // statistical-validity guard: no verdict below 100 replicates
    std::string pass = "na";
    if (replicates >= 100)
        pass = (res.empirical_rate >= res.analytical_bound - 2.0 * res.rate_stderr) ? "pass"
                                                                                    : "fail";
    out << "M,K,tau,T,R,gamma_u,replicates,seed,empirical_rate,stderr,analytical_bound,"
           "channel_mse,estimate_var,per_user_sinr,redraws,lower_bound_check\n";
    out << d.M << ',' << d.K << ',' << d.tau << ',' << csv_num(theta.T) << ',' << csv_num(R)
        << ',' << csv_num(gamma) << ',' << replicates << ',' << o.seed << ','
        << csv_num(res.empirical_rate) << ',' << csv_num(res.rate_stderr) << ','
        << csv_num(res.analytical_bound) << ',' << csv_num(res.channel_mse) << ','
        << csv_num(res.estimate_var) << ',' << csv_num(res.per_user_sinr) << ',' << res.redraws
        << ',' << pass << '\n';
    return pass == "fail" ? kValidationFailed : kOk;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Energy-efficiency calculator for zero-forcing multiuser MIMO uplinks"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string design_str;
    double rate_override = 0.0;
    int replicates = 2000;

    CLI::App* eval = app.add_subcommand("eval", "evaluate EE of one design point");
    add_common(eval, o);
    eval->add_option("--design", design_str, "M,K,tau")->required();
    eval->add_option("--rate", rate_override, "override scenario R (bits/s/Hz)");

    CLI::App* opt = app.add_subcommand("optimize", "maximize EE over (M,K,tau)");
    add_common(opt, o);
    opt->add_flag("--capped-k", o.capped_k, "restrict K <= floor(K_max)");
    opt->add_option("--fixed-mk", o.fixed_mk, "optimize tau only, at fixed M,K");
    opt->add_option("--fixed-k", o.fixed_k, "optimize (M,tau) at fixed K");
    opt->add_option("--m-cap", o.m_cap, "antenna search cap (default 4096)");

    CLI::App* cls = app.add_subcommand("classify", "evaluate regime conditions");
    add_common(cls, o);
    cls->add_option("--rate", rate_override, "override scenario R");

    CLI::App* swp = app.add_subcommand("sweep", "run the scenario's parameter sweep");
    add_common(swp, o);
    swp->add_flag("--capped-k", o.capped_k, "restrict K <= floor(K_max)");
    swp->add_option("--fixed-mk", o.fixed_mk, "fixed-pair column M,K (default 2,1)");
    swp->add_option("--fixed-k", o.fixed_k, "add fixed-K optimum column");
    swp->add_option("--m-cap", o.m_cap, "antenna search cap (default 4096)");

    CLI::App* mc = app.add_subcommand("mc-validate", "Monte-Carlo check of the rate bound");
    add_common(mc, o);
    mc->add_option("--design", design_str, "M,K,tau")->required();
    mc->add_option("--rate", rate_override, "override scenario R");
    mc->add_option("--replicates", replicates, "number of channel realizations");
    mc->add_option("--seed", o.seed, "RNG seed");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            err << "error: cannot open output file '" << o.out_path << "'\n";
            return kParseError;
        }
        sink = &file;
    }

    try {
        if (eval->parsed()) return run_eval(o, design_str, rate_override, *sink);
        if (opt->parsed()) return run_optimize(o, *sink);
        if (cls->parsed()) return run_classify(o, rate_override, *sink);
        if (swp->parsed()) return run_sweep_cmd(o, *sink);
        if (mc->parsed()) return run_mc_validate(o, design_str, rate_override, replicates, *sink);
    } catch (const ScenarioParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const CapHitError& e) {
        err << "error: " << e.what() << '\n';
        return kCapHit;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kParseError;
}

}  // namespace mimoee
