#include "sopq/flows/flaschka.hpp"

#include "sopq/poisson/projection.hpp"
#include "sopq/poly/errors.hpp"
#include "sopq/poly/numeric.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace sopq {
namespace {

std::vector<GenId> canonical_layout(const SystemSpec& spec) {
  std::vector<GenId> layout = spec.canonical_coords();
  for (int i = 1; i <= spec.K(); ++i) layout.push_back(gen_u(i));
  return layout;
}

std::vector<std::vector<NumericPolynomial>> compile(const PMatrix& m, std::span<const GenId> layout) {
  std::vector<std::vector<NumericPolynomial>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].emplace_back(m(i, j), layout);
  }
  return out;
}

using Dense = std::vector<std::vector<double>>;

Dense evaluate(const std::vector<std::vector<NumericPolynomial>>& m, std::span<const double> x) {
  Dense out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& p : m[i]) out[i].push_back(p(x));
  }
  return out;
}

double congruence_residual(const Dense& df, const Dense& j, const Dense& pi) {
  const std::size_t r = df.size();
  const std::size_t c = j.size();
  double worst = 0;
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = 0; y < r; ++y) {
      double v = 0;
      for (std::size_t k = 0; k < c; ++k) {
        if (df[x][k] == 0) continue;
        for (std::size_t l = 0; l < c; ++l) v += df[x][k] * j[k][l] * df[y][l];
      }
      worst = std::max(worst, std::abs(v - pi[x][y]));
    }
  }
  return worst;
}

}  // namespace

PhasePoint flaschka(const CanonicalPoint& x, const SystemSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.N());
  if (x.q.size() != n || x.p.size() != n) throw StructuralError("canonical point has the wrong dimension");
  PhasePoint out;
  for (int i = 1; i <= spec.K(); ++i) {
    double d = x.q[static_cast<std::size_t>(i - 1)] - x.q[static_cast<std::size_t>(i % spec.N())];
    double a = 0.5 * std::exp(0.5 * d);
    if (!std::isfinite(a)) throw RangeError("exponential overflow in a_" + std::to_string(i));
    out.a.push_back(a);
  }
  for (double p : x.p) {
    if (!std::isfinite(p)) throw RangeError("non-finite momentum");
    out.b.push_back(-0.5 * p);
  }
  return out;
}

std::vector<double> pack(const PhasePoint& x) {
  std::vector<double> s = x.a;
  s.insert(s.end(), x.b.begin(), x.b.end());
  return s;
}

PhasePoint unpack(const SystemSpec& spec, const std::vector<double>& state) {
  const auto k = static_cast<std::size_t>(spec.K());
  if (state.size() != k + static_cast<std::size_t>(spec.N())) throw StructuralError("state has the wrong dimension");
  return PhasePoint{{state.begin(), state.begin() + static_cast<std::ptrdiff_t>(k)},
                    {state.begin() + static_cast<std::ptrdiff_t>(k), state.end()}};
}

PushforwardResult pushforward_numeric(const SystemSpec& spec, int samples, std::uint64_t seed, double j1_scale) {
  const std::vector<GenId> layout = canonical_layout(spec);
  const std::vector<GenId> phase = spec.phase_coords();
  auto df = compile(flaschka_jacobian(spec), phase);
  auto pi1 = compile(build_tensor(TensorKind::pi1, spec).entries, phase);
  std::vector<std::vector<NumericPolynomial>> pi2, j2;
  if (!spec.periodic()) {
    pi2 = compile(build_tensor(TensorKind::pi2, spec).entries, phase);
    j2 = compile(build_tensor(TensorKind::J2, spec).entries, layout);
  }
  const auto n = static_cast<std::size_t>(spec.N());
  Dense j1(2 * n, std::vector<double>(2 * n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    j1[i][n + i] = j1_scale;
    j1[n + i][i] = -j1_scale;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  PushforwardResult res;
  res.samples = samples;
  res.seed = seed;
  for (int s = 0; s < samples; ++s) {
    CanonicalPoint x;
    for (std::size_t i = 0; i < n; ++i) x.q.push_back(dist(rng));
    for (std::size_t i = 0; i < n; ++i) x.p.push_back(dist(rng));
    std::vector<double> ab = pack(flaschka(x, spec));
    std::vector<double> qpu = x.q;
    qpu.insert(qpu.end(), x.p.begin(), x.p.end());
    for (int i = 1; i <= spec.K(); ++i) {
      qpu.push_back(std::exp(x.q[static_cast<std::size_t>(i - 1)] - x.q[static_cast<std::size_t>(i % spec.N())]));
    }
    Dense dfv = evaluate(df, ab);
    res.max_residual_j1 = std::max(res.max_residual_j1, congruence_residual(dfv, j1, evaluate(pi1, ab)));
    if (!spec.periodic()) {
      res.max_residual_j2 =
          std::max(res.max_residual_j2, congruence_residual(dfv, evaluate(j2, qpu), evaluate(pi2, ab)));
    }
  }
  return res;
}

CheckReport pushforward_check(const SystemSpec& spec, int samples, std::uint64_t seed, double tol) {
  PushforwardResult r = pushforward_numeric(spec, samples, seed);
  std::ostringstream d;
  d << spec.label() << " samples=" << samples << " seed=" << seed;
  auto text = [](double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
  };
  CheckReport rep;
  rep.add("flaschka.numeric.J1", d.str(), r.max_residual_j1 <= tol, text(r.max_residual_j1));
  if (!spec.periodic()) rep.add("flaschka.numeric.J2", d.str(), r.max_residual_j2 <= tol, text(r.max_residual_j2));
  return rep;
}

}  // namespace sopq
