#pragma once

#include "sopq/lax/system_spec.hpp"
#include "sopq/report.hpp"

#include <cstdint>
#include <vector>

namespace sopq {

struct CanonicalPoint {
  std::vector<double> q;
  std::vector<double> p;
};

/// a (K entries) and b (N entries).
struct PhasePoint {
  std::vector<double> a;
  std::vector<double> b;
};

/// a_i = exp((q_i - q_{i+1})/2)/2, b_i = -p_i/2; periodic adds a_N from q_N - q_1.
/// Throws RangeError when an exponential overflows or an input is not finite.
PhasePoint flaschka(const CanonicalPoint& x, const SystemSpec& spec);

/// Flat state in phase-chart order (a1..aK, b1..bN).
std::vector<double> pack(const PhasePoint& x);
PhasePoint unpack(const SystemSpec& spec, const std::vector<double>& state);

struct PushforwardResult {
  double max_residual_j1 = 0;
  double max_residual_j2 = 0;
  int samples = 0;
  std::uint64_t seed = 0;
};

/// max |DF J_k DF^T - pi_k o F| over random canonical points with q, p
/// uniform in [-1, 1]. J1 is taken as j1_scale times the standard symplectic
/// matrix. J2 is skipped for periodic specs.
PushforwardResult pushforward_numeric(const SystemSpec& spec, int samples, std::uint64_t seed, double j1_scale = 4.0);

CheckReport pushforward_check(const SystemSpec& spec, int samples, std::uint64_t seed, double tol = 1e-10);

}  // namespace sopq
