#pragma once

#include "sopq/verify/run_config.hpp"

#include <string>
#include <vector>

namespace sopq {

struct VerifyItem {
  std::string identity;
  std::string spec;
  bool pass = true;
  std::string residual;
  double wall_ms = 0;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

struct SuiteOptions {
  Mode mode = Mode::both;
  int samples = 100;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// "" or "adler:ab-sign".
  std::string mutate;
};

/// poisson, lenard, symmetry, lax, flaschka, all.
const std::vector<std::string>& suite_names();

/// Every block spec with N in ns (all m, periodic and not) plus every N = 3
/// sign pattern (2 signs, or 3 when periodic).
std::vector<SystemSpec> default_sweep(const std::vector<int>& ns);

/// Runs the suite over the specs on up to opt.jobs threads. Items are sorted
/// by (identity, spec) whatever the completion order. Throws ConfigError for
/// an unknown suite or mutation.
VerifyReport run_suite(const std::string& suite, const std::vector<SystemSpec>& specs, const SuiteOptions& opt);

/// Summary counts, resolved config and items; wall times only when timings.
Json verify_json(const VerifyReport& r, const RunConfig& config, bool timings);

}  // namespace sopq
