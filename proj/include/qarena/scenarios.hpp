#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace qarena {

/// Flat key = value scenario description. Values keep their config-file line
/// numbers so validation errors can point at the offending line; unknown keys
/// are rejected per scenario.
struct ScenarioConfig {
  std::string scenario;
  std::string source_path;
  std::map<std::string, std::string> values;
  std::map<std::string, int> lines;
  std::string out_dir = ".";

  void set(const std::string& key, const std::string& value, int line = 0);
};

/// Parses `key = value` lines ('#' starts a comment). Throws UsageError with
/// a line diagnostic on malformed input.
ScenarioConfig load_scenario_config(const std::string& scenario, const std::string& path);

/// Runs one scenario and writes its artifacts (transcript JSON, metrics CSV)
/// under cfg.out_dir. Returns 0 on completion; failures surface as the
/// library's error types.
int run_scenario(const ScenarioConfig& cfg);

}  // namespace qarena
