#include "sopq/poisson/projection.hpp"

#include "sopq/poly/errors.hpp"

namespace sopq {

PMatrix flaschka_jacobian(const SystemSpec& spec) {
  const int N = spec.N();
  const auto n = static_cast<std::size_t>(N);
  const auto k = static_cast<std::size_t>(spec.K());
  PMatrix df(k + n, 2 * n);
  Polynomial half(Coefficient::rational(1, 2));
  for (int i = 1; i <= spec.K(); ++i) {
    auto r = static_cast<std::size_t>(i - 1);
    df(r, r) += half * spec.a(i);
    df(r, static_cast<std::size_t>(i % N)) -= half * spec.a(i);
  }
  for (std::size_t i = 0; i < n; ++i) df(k + i, n + i) = -half;
  return df;
}

Polynomial to_phase(const SystemSpec& spec, const Polynomial& f) {
  std::map<GenId, Polynomial> images;
  for (int i = 1; i <= spec.K(); ++i) images[gen_u(i)] = Polynomial(4) * spec.a(i).pow(2);
  for (int i = 1; i <= spec.N(); ++i) images[gen_p(i)] = Polynomial(-2) * spec.b(i);
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [g, e] : m.factors()) {
      if (gen_kind(g) == GenKind::q) throw StructuralError("expression depends on " + gen_name(g) + ": " + f.to_string());
    }
  }
  return substitute(f, images, spec.phase_universe());
}

VectorField push_forward(const SystemSpec& spec, const VectorField& z) {
  PMatrix df = flaschka_jacobian(spec);
  VectorField out{"F*" + z.name, Chart::phase(spec), {}};
  std::vector<Polynomial> zc;
  for (const auto& c : z.components) zc.push_back(to_phase(spec, c));
  for (std::size_t r = 0; r < df.rows(); ++r) {
    Polynomial v = Polynomial().in(spec.phase_universe());
    for (std::size_t c = 0; c < df.cols(); ++c) {
      if (!df(r, c).is_zero()) v += df(r, c) * zc[c];
    }
    out.components.push_back(v);
  }
  return out;
}

PoissonTensor push_forward(const SystemSpec& spec, const PoissonTensor& t) {
  PMatrix df = flaschka_jacobian(spec);
  PMatrix j = t.entries.map([&](const Polynomial& p) { return to_phase(spec, p); });
  return PoissonTensor{"F*" + t.name, Chart::phase(spec), df * j * df.transpose()};
}

}  // namespace sopq
