#include "tscflp/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tscflp {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t as_count(const std::string& key, const std::string& value) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ConfigError(key + ": expected a non-negative integer, got '" + value + "'");
  return out;
}

double as_probability(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  in.imbue(std::locale::classic());
  double out = 0.0;
  if (!(in >> out) || !in.eof() || out < 0.0 || out > 1.0)
    throw ConfigError(key + ": expected a probability in [0, 1], got '" + value + "'");
  return out;
}

bool as_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(key + ": expected true or false, got '" + value + "'");
}

}  // namespace

void apply_setting(EngineConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "population") cfg.population = as_count(key, value);
  else if (key == "max_iterations") cfg.max_iterations = as_count(key, value);
  else if (key == "max_non_improving") cfg.max_non_improving = as_count(key, value);
  else if (key == "elites") cfg.elites = as_count(key, value);
  else if (key == "pc_min") cfg.operators.pc_min = as_probability(key, value);
  else if (key == "pc_max") cfg.operators.pc_max = as_probability(key, value);
  else if (key == "pm_min") cfg.operators.pm_min = as_probability(key, value);
  else if (key == "pm_max") cfg.operators.pm_max = as_probability(key, value);
  else if (key == "hidden") cfg.surrogate.hidden = as_count(key, value);
  else if (key == "local_search") cfg.surrogate.local_search = as_bool(key, value);
  else if (key == "activation") {
    try {
      cfg.surrogate.activation = parse_activation(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "ls_compare") {
    if (value == "surrogate") cfg.surrogate.ls_compare = LsCompare::surrogate;
    else if (value == "mixed") cfg.surrogate.ls_compare = LsCompare::mixed;
    else throw ConfigError("ls_compare: expected surrogate or mixed, got '" + value + "'");
  } else if (key == "depot_index") {
    if (value == "open_plants") cfg.mih.depot_index = DepotIndexMode::open_plants;
    else if (value == "all_plants") cfg.mih.depot_index = DepotIndexMode::all_plants;
    else throw ConfigError("depot_index: expected open_plants or all_plants, got '" + value + "'");
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void apply_config_text(EngineConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_config_file(EngineConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(cfg, buf.str());
}

}  // namespace tscflp
