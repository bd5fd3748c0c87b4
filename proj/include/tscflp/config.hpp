#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "tscflp/engine.hpp"

namespace tscflp {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Applies one `key = value` setting to `cfg`. Recognised keys:
///   population, max_iterations, max_non_improving, elites,
///   pc_min, pc_max, pm_min, pm_max,
///   hidden, activation (sigmoid|tanh), local_search (true|false),
///   ls_compare (surrogate|mixed), depot_index (open_plants|all_plants)
void apply_setting(EngineConfig& cfg, const std::string& key, const std::string& value);

/// Plain-text key=value file; '#' starts a comment, blank lines ignored.
void apply_config_text(EngineConfig& cfg, const std::string& text);
void apply_config_file(EngineConfig& cfg, const std::filesystem::path& path);

}  // namespace tscflp
