#include "sopq/poisson/recursion.hpp"

#include "sopq/poisson/fields.hpp"
#include "sopq/poly/errors.hpp"

namespace sopq {

RecursionOperator build_recursion(const SystemSpec& spec) {
  if (spec.periodic()) throw UnsupportedError("the recursion operator is only defined for non-periodic systems");
  ChartRef chart = Chart::canonical(spec);
  const auto N = static_cast<std::size_t>(spec.N());
  const UniverseRef& u = chart->universe();
  PMatrix r(2 * N, 2 * N);
  Polynomial half(Coefficient::rational(1, 2));
  for (std::size_t i = 0; i < N; ++i) {
    Polynomial bd = -Polynomial::generator(u, gen_p(static_cast<int>(i) + 1));
    r(i, i) = half * bd;
    r(N + i, N + i) = half * bd;
    for (std::size_t j = 0; j < N; ++j) {
      if (i != j) r(i, N + j) = half * Polynomial(i < j ? -1 : 1);
    }
  }
  for (int i = 1; i <= spec.K(); ++i) {
    Polynomial c = half * Polynomial(static_cast<long>(spec.eps(i))) * Polynomial::generator(u, gen_u(i));
    auto k = static_cast<std::size_t>(i - 1);
    r(N + k, k + 1) = c;
    r(N + k + 1, k) = -c;
  }
  return RecursionOperator{chart, r};
}

PoissonTensor recursion_apply(const RecursionOperator& r, const PoissonTensor& t, int times) {
  if (times < 0) throw StructuralError("recursion power must be non-negative");
  PoissonTensor out = t;
  for (int k = 0; k < times; ++k) out.entries = r.matrix * out.entries;
  if (times > 0) out.name = "R^" + std::to_string(times) + " " + t.name;
  return out;
}

VectorField recursion_apply(const RecursionOperator& r, const VectorField& z, int times) {
  if (times < 0) throw StructuralError("recursion power must be non-negative");
  VectorField out = z;
  const std::size_t n = z.components.size();
  for (int k = 0; k < times; ++k) {
    std::vector<Polynomial> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!r.matrix(i, j).is_zero() && !out.components[j].is_zero()) next[i] += r.matrix(i, j) * out.components[j];
      }
    }
    out.components = std::move(next);
  }
  if (times > 0) out.name = "R^" + std::to_string(times) + " " + z.name;
  return out;
}

Polynomial canonical_h1(const SystemSpec& spec) {
  UniverseRef u = spec.canonical_universe();
  Polynomial h = Polynomial().in(u);
  for (int i = 1; i <= spec.N(); ++i) h -= Polynomial(2) * Polynomial::generator(u, gen_p(i));
  return h;
}

Polynomial canonical_h2(const SystemSpec& spec) {
  UniverseRef u = spec.canonical_universe();
  Polynomial h = Polynomial().in(u);
  for (int i = 1; i <= spec.N(); ++i) {
    h += Polynomial(Coefficient::rational(1, 2)) * Polynomial::generator(u, gen_p(i)).pow(2);
  }
  for (int i = 1; i <= spec.K(); ++i) h += Polynomial(static_cast<long>(spec.eps(i))) * Polynomial::generator(u, gen_u(i));
  return h;
}

std::vector<Polynomial> canonical_hamiltonians(const SystemSpec& spec, int jmax) {
  std::vector<Polynomial> h{canonical_h1(spec)};
  if (jmax < 2) return h;
  VectorField z1 = build_field(FieldKind::Z, spec, 1);
  for (int j = 1; j < jmax; ++j) {
    h.push_back(apply(z1, h.back()).scale(Coefficient::rational(1, j + 1)));
  }
  return h;
}

}  // namespace sopq
