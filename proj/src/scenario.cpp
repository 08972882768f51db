#include "mimoee/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace mimoee {

double SweepAxis::at(int i) const {
    if (points == 1) return start;
    const double f = static_cast<double>(i) / (points - 1);
    if (spacing == SweepSpacing::Log)
        return start * std::pow(stop / start, f);
    return start + (stop - start) * f;
}

const char* sweep_variable_name(SweepVariable v) {
    switch (v) {
        case SweepVariable::Gc: return "Gc";
        case SweepVariable::p_r: return "p_r";
        default: return "R";
    }
}

std::pair<PhysicalParams, double> Scenario::at_point(double value) const {
    PhysicalParams p = phys;
    double rate = R;
    if (sweep) {
        switch (sweep->variable) {
            case SweepVariable::Gc: p.Gc = value; break;
            case SweepVariable::p_r: p.p_r = value; break;
            case SweepVariable::R: rate = value; break;
        }
    }
    if (beta) p.p_d = *beta * p.p_r;
    if (delta) p.p_s = *delta * p.p_r;
    if (mu) p.C0 = *mu * p.p_r / p.B;
    return {p, rate};
}

std::pair<PhysicalParams, double> Scenario::resolved() const {
    PhysicalParams p = phys;
    if (beta) p.p_d = *beta * p.p_r;
    if (delta) p.p_s = *delta * p.p_r;
    if (mu) p.C0 = *mu * p.p_r / p.B;
    return {p, R};
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& v, int line, const std::string& key) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ScenarioParseError(line, "invalid numeric value '" + v + "' for key '" + key + "'");
    return x;
}

bool parse_bool(const std::string& v, int line, const std::string& key) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ScenarioParseError(line, "invalid boolean '" + v + "' for key '" + key + "'");
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    std::set<std::string> seen;
    std::optional<SweepVariable> variable;
    std::optional<double> start, stop;
    std::optional<int> points;
    SweepSpacing spacing = SweepSpacing::Log;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ScenarioParseError(line, "expected 'key = value', got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty()) throw ScenarioParseError(line, "empty key");
        if (!seen.insert(key).second)
            throw ScenarioParseError(line, "duplicate key '" + key + "'");

        if (key == "N0") sc.phys.N0 = parse_number(val, line, key);
        else if (key == "B") sc.phys.B = parse_number(val, line, key);
        else if (key == "Tc") sc.phys.Tc = parse_number(val, line, key);
        else if (key == "Gc") sc.phys.Gc = parse_number(val, line, key);
        else if (key == "alpha") sc.phys.alpha = parse_number(val, line, key);
        else if (key == "p_r") sc.phys.p_r = parse_number(val, line, key);
        else if (key == "p_d") sc.phys.p_d = parse_number(val, line, key);
        else if (key == "p_s") sc.phys.p_s = parse_number(val, line, key);
        else if (key == "C0") sc.phys.C0 = parse_number(val, line, key);
        else if (key == "R") sc.R = parse_number(val, line, key);
        else if (key == "beta") sc.beta = parse_number(val, line, key);
        else if (key == "delta") sc.delta = parse_number(val, line, key);
        else if (key == "mu") sc.mu = parse_number(val, line, key);
        else if (key == "variable") {
            if (val == "Gc") variable = SweepVariable::Gc;
            else if (val == "p_r") variable = SweepVariable::p_r;
            else if (val == "R") variable = SweepVariable::R;
            else throw ScenarioParseError(line, "variable must be one of Gc|p_r|R, got '" + val + "'");
        } else if (key == "start") start = parse_number(val, line, key);
        else if (key == "stop") stop = parse_number(val, line, key);
        else if (key == "points") points = static_cast<int>(parse_number(val, line, key));
        else if (key == "spacing") {
            if (val == "log") spacing = SweepSpacing::Log;
            else if (val == "linear") spacing = SweepSpacing::Linear;
            else throw ScenarioParseError(line, "spacing must be log|linear, got '" + val + "'");
        } else if (key == "capped_k") sc.capped_k = parse_bool(val, line, key);
        else if (key == "fixed_k") sc.fixed_k = static_cast<int>(parse_number(val, line, key));
        else if (key == "fixed_mk") {
            const auto comma = val.find(',');
            if (comma == std::string::npos)
                throw ScenarioParseError(line, "fixed_mk must be 'M,K'");
            sc.fixed_mk = {static_cast<int>(parse_number(trim(val.substr(0, comma)), line, key)),
                           static_cast<int>(parse_number(trim(val.substr(comma + 1)), line, key))};
        } else {
            throw ScenarioParseError(line, "unknown key '" + key + "'");
        }
    }

    if (variable || start || stop || points) {
        if (!variable) throw ScenarioParseError(line, "sweep needs 'variable'");
        if (!start || !stop) throw ScenarioParseError(line, "sweep needs 'start' and 'stop'");
        if (!points || *points < 2) throw ScenarioParseError(line, "sweep needs 'points' >= 2");
        if (spacing == SweepSpacing::Log && !(*start > 0.0 && *stop > 0.0))
            throw ScenarioParseError(line, "log spacing needs positive start/stop");
        if (*start == *stop) throw ScenarioParseError(line, "sweep start and stop must differ");
        sc.sweep = SweepAxis{*variable, *start, *stop, *points, spacing};
    }

    try {
        sc.at_point(sc.sweep ? sc.sweep->start : sc.phys.Gc).first.validate();
        if (!(sc.R > 0.0) && !(sc.sweep && sc.sweep->variable == SweepVariable::R))
            throw std::invalid_argument("R must be > 0");
    } catch (const std::invalid_argument& e) {
        throw ScenarioParseError(line, e.what());
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ScenarioParseError(0, "cannot open scenario file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_scenario(ss.str());
}

}  // namespace mimoee
