#include "mimoee/presets.hpp"

#include <stdexcept>

namespace mimoee {

namespace {

// Shared constants: N0 = 10^-20.4 W/Hz, B = 200 kHz, Tc = 2 ms (T = 400).

const std::string kFig1 = R"(# Optimal EE versus channel gain, fixed hardware constants.
N0 = 3.9810717055349695e-21   # 10^-20.4 W/Hz
B = 2e5
Tc = 2e-3
Gc = 1e-10                    # -100 dB reference; swept below
alpha = 2
p_r = 0.01
p_d = 0.01
p_s = 0.1
C0 = 1e-9
R = 8
variable = Gc
start = 1e-8                  # -80 dB
stop = 7.9432823472428051e-15 # -141 dB
points = 62                   # 1 dB steps
spacing = log
)";

const std::string kFig4 = R"(# Optimal EE versus p_r at fixed PCP ratios (technology scaling).
N0 = 3.9810717055349695e-21   # 10^-20.4 W/Hz
B = 2e5
Tc = 2e-3
Gc = 1e-10                    # -100 dB
alpha = 2
p_r = 0.01
beta = 1                      # p_d = beta * p_r
delta = 10                    # p_s = delta * p_r
mu = 0.02                     # C0 = mu * p_r / B
R = 8
variable = p_r
start = 0.1
stop = 1e-6
points = 51                   # 10 per decade
spacing = log
)";

const std::string kFig5 = R"(# High spectral efficiency with the user count pinned at K_max.
N0 = 3.9810717055349695e-21   # 10^-20.4 W/Hz
B = 2e5
Tc = 2e-3
Gc = 1e-7                     # -70 dB reference; swept below
alpha = 2
p_r = 0.01
p_d = 0.01
p_s = 0.01
C0 = 1e-9
R = 50
capped_k = true
fixed_k = 16                  # floor(K_max)
variable = Gc
start = 1e-6                  # -60 dB
stop = 1e-10                  # -100 dB
points = 41
spacing = log
)";

}  // namespace

const std::string& preset_text(const std::string& name) {
    if (name == "fig1") return kFig1;
    if (name == "fig4") return kFig4;
    if (name == "fig5") return kFig5;
    throw std::invalid_argument("unknown preset '" + name + "' (expected fig1|fig4|fig5)");
}

Scenario preset_scenario(const std::string& name) { return parse_scenario(preset_text(name)); }

}  // namespace mimoee
