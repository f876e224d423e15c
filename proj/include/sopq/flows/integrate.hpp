#pragma once

#include "sopq/lax/system_spec.hpp"

#include <string>
#include <vector>

namespace sopq {

/// Fixed-step samples of a flow. points[k] is the state at times[k] in
/// phase-chart order. If the run hit a non-finite state it stops early:
/// aborted is set and the last stored point is the last finite one.
struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> points;
  double h = 0;
  std::string method = "rk4";
  bool aborted = false;

  double last_valid_time() const { return times.empty() ? 0.0 : times.back(); }
};

/// Classical RK4 on the polynomial equations of motion, round(T/h) steps of
/// size h. A negative h integrates backwards. Throws UnsupportedError for
/// h == 0, T < |h| or a state of the wrong size.
Trajectory integrate(const SystemSpec& spec, const std::vector<double>& x0, double T, double h);

/// Integrates forward to T and back with -h; returns max |x_back - x0|.
double time_reversal_error(const SystemSpec& spec, const std::vector<double>& x0, double T, double h);

}  // namespace sopq
