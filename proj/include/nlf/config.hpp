#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "nlf/solver.hpp"

namespace nlf {

/// Parses a JSON run description with sections grid, model, scenario, run.
/// Omitted grid bounds and reaches default to the scenario preset's values.
/// Throws ConfigError with the JSON line or the offending field.
SimConfig parse_config(std::string_view json_text);

SimConfig load_config(const std::filesystem::path& path);

/// Fully resolved JSON document; parse_config(to_json(c)) == c.
std::string to_json(const SimConfig& config, int indent = 2);

}  // namespace nlf
