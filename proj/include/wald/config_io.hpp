#pragma once

#include <string>

#include <json.hpp>

#include "wald/geometry.hpp"

namespace wald {

/// Parses {"name": ..., "points": [[x,y,z], ...]} where coordinates are
/// integers or decimal strings (for big values).  Canonicalizes every
/// point; duplicate points are an error naming both indices.
Config parse_config_json(const std::string& text);

Config parse_config_file(const std::string& path);

nlohmann::ordered_json config_to_json(const Config& z);

} // namespace wald
