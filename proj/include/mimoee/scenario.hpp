#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "mimoee/physics.hpp"

namespace mimoee {

/// Thrown on malformed scenario text; carries the 1-based line number.
class ScenarioParseError : public std::runtime_error {
public:
    ScenarioParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "scenario line " + std::to_string(line) + ": " + what
                                      : "scenario: " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class SweepVariable { Gc, p_r, R };
enum class SweepSpacing { Log, Linear };

struct SweepAxis {
    SweepVariable variable;
    double start;
    double stop;
    int points;
    SweepSpacing spacing;

    double at(int i) const;  ///< i-th grid value, 0 <= i < points
};

/// Parsed key=value scenario: physical constants, target rate, optional
/// PCP ratios, sweep axis and optimizer mode flags.
struct Scenario {
    PhysicalParams phys{};
    double R = 0.0;
    /// When set, p_d/p_s/C0 are re-derived from p_r as beta*p_r, delta*p_r,
    /// mu*p_r/B at every sweep point (fixed-ratio scaling).
    std::optional<double> beta, delta, mu;
    std::optional<SweepAxis> sweep;
    bool capped_k = false;
    std::optional<std::pair<int, int>> fixed_mk;
    std::optional<int> fixed_k;

    /// Physical parameters with the sweep variable set to `value` and the
    /// ratio-locked PCPs re-derived. Returns the rate alongside (R can be
    /// the sweep variable).
    std::pair<PhysicalParams, double> at_point(double value) const;

    /// Parameters at the scenario's own reference point (ratio-locked PCPs
    /// derived, no sweep override).
    std::pair<PhysicalParams, double> resolved() const;
};

const char* sweep_variable_name(SweepVariable v);

/// Parses the flat `key = value` format (one pair per line, # comments).
Scenario parse_scenario(const std::string& text);

/// Reads and parses a scenario file.
Scenario load_scenario(const std::string& path);

}  // namespace mimoee
