#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

namespace stablab::stability {

/// Flat `key = value` text, '#' comments. Lists are comma separated.
class ExperimentConfig {
 public:
  static ExperimentConfig parse(const std::string& text);
  static ExperimentConfig load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::string get(const std::string& key) const;  // InvalidArgument when absent
  std::string get(const std::string& key, const std::string& fallback) const;
  long get_int(const std::string& key, long fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::vector<std::string> get_list(const std::string& key) const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

// Paths in configs are absolute or relative to the data directory.
std::string resolve_data_path(const std::string& path);

// Dispatches on `experiment`: recovery, voiculescu, quotient-transfer, alpha.
// The result carries the config, the seed and one JSON row per run.
nlohmann::json run_experiment(const ExperimentConfig& cfg);

// Envelope used for recovery runs: distance moved <= 10 delta per generator.
inline constexpr double kRecoveryEnvelope = 10.0;

}  // namespace stablab::stability
