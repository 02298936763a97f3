#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lowreg/harness/config.hpp"

namespace lowreg::harness {

enum class PresetScale {
  Desk,   ///< K = 2^8, dyadic ladder 2^-4 .. 2^-10
  Paper,  ///< K = 2^10, ladder j/512
};

std::optional<PresetScale> parse_preset_scale(std::string_view name);

/// Names accepted by preset(), in display order.
std::vector<std::string> list_presets();

/// Study configuration of a named experiment. Throws ConfigError for an
/// unknown name.
StudyConfig preset(std::string_view name, PresetScale scale = PresetScale::Paper);

}  // namespace lowreg::harness
