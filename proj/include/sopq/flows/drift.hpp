#pragma once

#include "sopq/flows/integrate.hpp"
#include "sopq/lax/invariants.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sopq {

struct DriftReport {
  /// max_t |f(x(t)) - f(x(0))| keyed "H1", "H2", ..., "I1", ...
  std::map<std::string, double> invariant_drift;
  /// Same for c_1..c_n of det(lambda - L).
  std::vector<double> charpoly_drift;
  double h = 0;
  std::size_t steps = 0;
  bool aborted = false;
  double last_valid_time = 0;
  /// drift(h) / drift(h/2) for the tracked invariant, when requested.
  std::optional<double> order_ratio;
  std::string order_invariant;

  double max_charpoly_drift() const;
};

/// Evaluates every real family member and the characteristic polynomial of L
/// along the trajectory. Members with non-real coefficients are skipped, and
/// so is the characteristic polynomial when L is empty.
DriftReport drift_metrics(const SystemSpec& spec, const Trajectory& traj, const InvariantFamily& fam,
                          const PMatrix& L);

/// Numeric coefficients c_1..c_n of det(lambda - X) via power traces.
std::vector<double> numeric_charpoly(const std::vector<std::vector<double>>& x);

/// Runs with h and h/2 and returns the drift ratio of `invariant` ("H2" by
/// default). Nominal value for RK4 is 16. Returns nullopt if either run aborts
/// or the half-step drift is zero.
std::optional<double> convergence_ratio(const SystemSpec& spec, const std::vector<double>& x0, double T, double h,
                                        const InvariantFamily& fam, const std::string& invariant = "H2");

}  // namespace sopq
