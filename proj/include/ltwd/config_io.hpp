#pragma once

#include <filesystem>

#include <json.hpp>

#include "ltwd/config.hpp"

namespace ltwd {

// Parses, applies defaults, and validates. Throws ConfigError.
SimulationConfig parse_config(const nlohmann::json& doc);
SimulationConfig load_config(const std::filesystem::path& path);

// Fully resolved echo: every field present, defaults spelled out.
nlohmann::json to_json(const SimulationConfig& config);

}  // namespace ltwd
