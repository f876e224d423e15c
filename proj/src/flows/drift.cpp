#include "sopq/flows/drift.hpp"

#include "sopq/poly/numeric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace sopq {
namespace {

struct Tracked {
  std::string name;
  NumericPolynomial f;
};

std::vector<Tracked> tracked_members(const InvariantFamily& fam, std::span<const GenId> layout) {
  std::vector<Tracked> out;
  for (const auto& [k, h] : fam.H) out.push_back({"H" + std::to_string(k), NumericPolynomial(h, layout)});
  for (const auto& [k, i] : fam.I) {
    if (i.is_real()) out.push_back({"I" + std::to_string(k), NumericPolynomial(i, layout)});
  }
  return out;
}

double invariant_drift(const Trajectory& traj, const NumericPolynomial& f) {
  double f0 = f(traj.points.front());
  double worst = 0;
  for (const auto& x : traj.points) worst = std::max(worst, std::abs(f(x) - f0));
  return worst;
}

}  // namespace

double DriftReport::max_charpoly_drift() const {
  double m = 0;
  for (double d : charpoly_drift) m = std::max(m, d);
  return m;
}

std::vector<double> numeric_charpoly(const std::vector<std::vector<double>>& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  std::vector<double> p;
  Eigen::MatrixXd power = m;
  for (Eigen::Index k = 1; k <= n; ++k) {
    p.push_back(power.trace());
    power = power * m;
  }
  // Newton: k c_k = -(p_k + c_1 p_{k-1} + ... + c_{k-1} p_1)
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = 1.0;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
    double s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += c[k - j] * p[j - 1];
    c[k] = -s / static_cast<double>(k);
  }
  return {c.begin() + 1, c.end()};
}

DriftReport drift_metrics(const SystemSpec& spec, const Trajectory& traj, const InvariantFamily& fam,
                          const PMatrix& L) {
  const std::vector<GenId> layout = spec.phase_coords();
  DriftReport rep;
  rep.h = traj.h;
  rep.steps = traj.points.empty() ? 0 : traj.points.size() - 1;
  rep.aborted = traj.aborted;
  rep.last_valid_time = traj.last_valid_time();
  if (traj.points.empty()) return rep;
  for (const auto& t : tracked_members(fam, layout)) rep.invariant_drift[t.name] = invariant_drift(traj, t.f);
  if (L.rows() == 0) return rep;

  std::vector<std::vector<NumericPolynomial>> lf(L.rows());
  for (std::size_t i = 0; i < L.rows(); ++i) {
    for (std::size_t j = 0; j < L.cols(); ++j) lf[i].emplace_back(L(i, j), layout);
  }
  auto eval_l = [&](const std::vector<double>& x) {
    std::vector<std::vector<double>> m(L.rows());
    for (std::size_t i = 0; i < L.rows(); ++i) {
      for (const auto& f : lf[i]) m[i].push_back(f(x));
    }
    return m;
  };
  std::vector<double> c0 = numeric_charpoly(eval_l(traj.points.front()));
  rep.charpoly_drift.assign(c0.size(), 0.0);
  for (const auto& x : traj.points) {
    std::vector<double> c = numeric_charpoly(eval_l(x));
    for (std::size_t k = 0; k < c.size(); ++k) {
      rep.charpoly_drift[k] = std::max(rep.charpoly_drift[k], std::abs(c[k] - c0[k]));
    }
  }
  return rep;
}

std::optional<double> convergence_ratio(const SystemSpec& spec, const std::vector<double>& x0, double T, double h,
                                        const InvariantFamily& fam, const std::string& invariant) {
  const std::vector<GenId> layout = spec.phase_coords();
  std::optional<NumericPolynomial> f;
  for (auto& t : tracked_members(fam, layout)) {
    if (t.name == invariant) f = t.f;
  }
  if (!f) return std::nullopt;
  Trajectory full = integrate(spec, x0, T, h);
  Trajectory half = integrate(spec, x0, T, h / 2);
  if (full.aborted || half.aborted) return std::nullopt;
  double d1 = invariant_drift(full, *f);
  double d2 = invariant_drift(half, *f);
  if (d2 == 0) return std::nullopt;
  return d1 / d2;
}

}  // namespace sopq
