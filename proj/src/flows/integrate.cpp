#include "sopq/flows/integrate.hpp"

#include "sopq/lax/equations.hpp"
#include "sopq/poly/errors.hpp"
#include "sopq/poly/numeric.hpp"

#include <cmath>

namespace sopq {
namespace {

bool finite(const std::vector<double>& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

Trajectory integrate(const SystemSpec& spec, const std::vector<double>& x0, double T, double h) {
  if (h == 0 || !std::isfinite(h)) throw UnsupportedError("step must be non-zero");
  if (!(T >= std::abs(h))) throw UnsupportedError("T must be at least |h|");
  const std::vector<GenId> layout = spec.phase_coords();
  if (x0.size() != layout.size()) throw UnsupportedError("initial state has the wrong dimension");
  if (!finite(x0)) throw UnsupportedError("initial state is not finite");
  const std::vector<Polynomial> eqs = equations_of_motion(spec);
  const NumericField rhs(eqs, layout);

  const auto steps = static_cast<long>(std::llround(T / std::abs(h)));
  const std::size_t n = x0.size();
  Trajectory tr;
  tr.h = h;
  tr.times.reserve(static_cast<std::size_t>(steps) + 1);
  tr.points.reserve(static_cast<std::size_t>(steps) + 1);
  tr.times.push_back(0.0);
  tr.points.push_back(x0);

  std::vector<double> x = x0, k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (long s = 1; s <= steps; ++s) {
    rhs.eval(x, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    rhs.eval(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    rhs.eval(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
    rhs.eval(tmp, k4);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!finite(tmp)) {
      tr.aborted = true;
      break;
    }
    x = tmp;
    tr.times.push_back(static_cast<double>(s) * h);
    tr.points.push_back(x);
  }
  return tr;
}

double time_reversal_error(const SystemSpec& spec, const std::vector<double>& x0, double T, double h) {
  Trajectory fwd = integrate(spec, x0, T, h);
  if (fwd.aborted) return INFINITY;
  Trajectory back = integrate(spec, fwd.points.back(), T, -h);
  if (back.aborted) return INFINITY;
  double err = 0;
  for (std::size_t i = 0; i < x0.size(); ++i) err = std::max(err, std::abs(back.points.back()[i] - x0[i]));
  return err;
}

}  // namespace sopq
