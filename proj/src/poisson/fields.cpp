#include "sopq/poisson/fields.hpp"

#include "sopq/poisson/projection.hpp"
#include "sopq/poisson/recursion.hpp"
#include "sopq/poly/errors.hpp"

namespace sopq {
namespace {

VectorField conformal(const SystemSpec& spec) {
  ChartRef chart = Chart::canonical(spec);
  const int N = spec.N();
  VectorField z{"Z0", chart, {}};
  for (int i = 1; i <= N; ++i) z.components.push_back(Polynomial(static_cast<long>(N - 2 * i + 1)).in(chart->universe()));
  for (int i = 1; i <= N; ++i) z.components.push_back(Polynomial::generator(chart->universe(), gen_p(i)));
  return z;
}

VectorField alpha_beta(const SystemSpec& spec) {
  if (spec.periodic()) throw UnsupportedError("X1 is only defined for non-periodic systems");
  VectorField x{"X1ab", Chart::phase(spec), {}};
  const int K = spec.K();
  for (int n = 1; n <= K; ++n) {
    x.components.push_back(Polynomial(-n) * spec.a(n) * spec.b(n) + Polynomial(n + 2) * spec.a(n) * spec.b(n + 1));
  }
  for (int n = 1; n <= spec.N(); ++n) {
    Polynomial beta = spec.b(n).pow(2);
    if (n <= K) beta += Polynomial(static_cast<long>((2 * n + 3) * spec.eps(n))) * spec.a(n).pow(2);
    if (n >= 2) beta += Polynomial(static_cast<long>((1 - 2 * n) * spec.eps(n - 1))) * spec.a(n - 1).pow(2);
    x.components.push_back(beta);
  }
  return x;
}

}  // namespace

VectorField build_field(FieldKind kind, const SystemSpec& spec, int index) {
  switch (kind) {
    case FieldKind::Z: {
      if (index < 0) throw UnsupportedError("Z_i needs i >= 0");
      VectorField z0 = conformal(spec);
      if (index == 0) return z0;
      VectorField z = recursion_apply(build_recursion(spec), z0, index);
      z.name = "Z" + std::to_string(index);
      return z;
    }
    case FieldKind::X1: {
      VectorField x = push_forward(spec, build_field(FieldKind::Z, spec, 1));
      x.name = "X1";
      return x;
    }
    case FieldKind::X2: {
      VectorField x = push_forward(spec, build_field(FieldKind::Z, spec, 2));
      x.name = "X2";
      return x;
    }
    case FieldKind::X1AlphaBeta:
      return alpha_beta(spec);
  }
  throw UnsupportedError("unknown field kind");
}

}  // namespace sopq
