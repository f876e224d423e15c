#include "sopq/lax/equations.hpp"

#include "sopq/poly/derivation.hpp"

namespace sopq {

std::vector<Polynomial> equations_of_motion(const SystemSpec& spec) {
  const int N = spec.N();
  const int K = spec.K();
  std::vector<Polynomial> rhs;
  for (int i = 1; i <= K; ++i) rhs.push_back(spec.a(i) * (spec.b(i % N + 1) - spec.b(i)));
  for (int i = 1; i <= N; ++i) {
    Polynomial v = Polynomial().in(spec.phase_universe());
    if (i <= K) v += Polynomial(2L * spec.eps(i)) * spec.a(i).pow(2);
    int prev = i - 1;
    if (prev == 0 && spec.periodic()) prev = N;
    if (prev >= 1) v -= Polynomial(2L * spec.eps(prev)) * spec.a(prev).pow(2);
    rhs.push_back(v);
  }
  return rhs;
}

Polynomial quadratic_hamiltonian(const SystemSpec& spec) {
  Polynomial h = Polynomial().in(spec.phase_universe());
  for (int i = 1; i <= spec.N(); ++i) h += Polynomial(Coefficient::rational(1, 2)) * spec.b(i).pow(2);
  for (int i = 1; i <= spec.K(); ++i) h += Polynomial(static_cast<long>(spec.eps(i))) * spec.a(i).pow(2);
  return h;
}

Polynomial linear_casimir(const SystemSpec& spec) {
  Polynomial h = Polynomial().in(spec.phase_universe());
  for (int i = 1; i <= spec.N(); ++i) h += spec.b(i);
  return h;
}

Polynomial product_of_a(const SystemSpec& spec) {
  Polynomial h = Polynomial(1).in(spec.phase_universe());
  for (int i = 1; i <= spec.K(); ++i) h *= spec.a(i);
  return h;
}

std::vector<Polynomial> gradient(const Polynomial& f, const std::vector<GenId>& coords, const UniverseRef& u) {
  std::vector<Polynomial> g;
  g.reserve(coords.size());
  for (GenId c : coords) g.push_back(Derivation::partial(u, c)(f));
  return g;
}

Polynomial time_derivative(const SystemSpec& spec, const Polynomial& f, const std::vector<Polynomial>& rhs) {
  auto grad = gradient(f, spec.phase_coords(), spec.phase_universe());
  Polynomial d = Polynomial().in(spec.phase_universe());
  for (std::size_t c = 0; c < grad.size(); ++c) d += grad[c] * rhs[c];
  return d;
}

}  // namespace sopq
