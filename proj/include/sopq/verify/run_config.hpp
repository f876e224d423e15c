#pragma once

#include "sopq/io/serialize.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sopq {

/// Invalid user configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { symbolic, numeric, both };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

struct SystemConfig {
  std::string variant = "block";  // "block" or "pattern"
  int N = 5;
  int m = 3;
  std::string signs;
  bool periodic = false;
};

struct RunConfig {
  /// Unset: commands use their defaults (so(6,5) for build/simulate, the sweep for verify).
  std::optional<SystemConfig> system;
  /// N values for verify sweeps; empty means {3, 4, 5}.
  std::vector<int> n_values;
  double T = 0.5;
  double h = 1e-3;
  int stride = 1;
  std::uint64_t seed = 1;
  int samples = 100;
  std::string suite = "all";
  int jobs = 1;
  std::string out = ".";
  Mode mode = Mode::both;
  bool timings = false;
  std::string mutate;
  bool check_order = false;
  /// "default" (a = 1, b = 0), "zero-a" (a = 0, b = 1..N), "random" (seeded) or
  /// "values" (explicit a then b in ic_values).
  std::string ic = "default";
  std::vector<double> ic_values;
};

SystemSpec to_spec(const SystemConfig& c);

/// Parses "3..5", "3,4,5" or "4".
std::vector<int> parse_n_range(const std::string& s);

Json config_json(const RunConfig& c);
/// Overlays the fields present in j onto c. Throws ConfigError on bad types or values.
void apply_config_json(RunConfig& c, const Json& j);

/// Initial phase state for simulate.
std::vector<double> initial_state(const RunConfig& c, const SystemSpec& spec);

}  // namespace sopq
