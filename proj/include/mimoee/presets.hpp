#pragma once

#include <string>

#include "mimoee/scenario.hpp"

namespace mimoee {

/// Scenario text for a named preset: fig1, fig4 or fig5.
/// Throws std::invalid_argument for an unknown name.
const std::string& preset_text(const std::string& name);

Scenario preset_scenario(const std::string& name);

}  // namespace mimoee
