#include "sopq/poisson/relations.hpp"

#include "sopq/lax/equations.hpp"
#include "sopq/poisson/projection.hpp"
#include "sopq/poisson/recursion.hpp"

namespace sopq {
namespace {

std::string field_residual(const VectorField& x) {
  std::string s;
  for (std::size_t i = 0; i < x.components.size(); ++i) {
    if (x.components[i].is_zero()) continue;
    if (!s.empty()) s += "; ";
    s += gen_name(x.chart->coords()[i]) + ": " + x.components[i].to_string();
  }
  return s;
}

void add_zero(CheckReport& rep, const std::string& id, const std::string& detail, const Polynomial& r) {
  rep.add(id, detail, r.is_zero(), r.is_zero() ? std::string() : r.to_string());
}

void add_zero(CheckReport& rep, const std::string& id, const std::string& detail, const VectorField& r) {
  bool z = is_zero(r);
  rep.add(id, detail, z, z ? std::string() : field_residual(r));
}

void add_zero(CheckReport& rep, const std::string& id, const std::string& detail, const PoissonTensor& r) {
  bool z = r.entries.is_zero();
  rep.add(id, detail, z, z ? std::string() : tensor_residual(r));
}

PoissonTensor difference(const PoissonTensor& t, const PoissonTensor& r) {
  return PoissonTensor{t.name, t.chart, t.entries - r.entries};
}

/// H_{2i} from the block Lax matrix, or I_{2i} for tridiagonal specs.
std::map<int, Polynomial> even_hamiltonians(const SystemSpec& spec, const InvariantFamily& fam) {
  std::map<int, Polynomial> out;
  for (const auto& [k, h] : spec.is_block() ? fam.H : fam.I) {
    if (k % 2 == 0) out[k] = h;
  }
  return out;
}

std::string tag(const char* name, int k) { return std::string(name) + std::to_string(k); }

}  // namespace

CheckReport poisson_checks(const SystemSpec& spec) {
  CheckReport rep;
  const std::string d = spec.label();
  std::vector<PoissonTensor> phase = {build_tensor(TensorKind::pi1, spec), build_tensor(TensorKind::pi2, spec),
                                      build_tensor(TensorKind::adler, spec)};
  if (!spec.periodic()) phase.push_back(build_tensor(TensorKind::pi3, spec));
  for (const auto& t : phase) rep.merge(jacobi_check(t, d));
  rep.merge(pencil_compat_check(phase[0], phase[1], d));
  if (!spec.periodic()) {
    rep.merge(pencil_compat_check(phase[0], phase[3], d));
    rep.merge(pencil_compat_check(phase[1], phase[3], d));
    PoissonTensor j1 = build_tensor(TensorKind::J1, spec);
    PoissonTensor j2 = build_tensor(TensorKind::J2, spec);
    rep.merge(jacobi_check(j1, d));
    rep.merge(jacobi_check(j2, d));
    rep.merge(pencil_compat_check(j1, j2, d));
    add_zero(rep, "poisson.recursion.RJ1=J2", d, difference(recursion_apply(build_recursion(spec), j1), j2));
  } else {
    rep.merge(jacobi_check(build_tensor(TensorKind::J1, spec), d));
  }
  return rep;
}

CheckReport casimir_checks(const SystemSpec& spec, const InvariantFamily& fam) {
  CheckReport rep;
  PoissonTensor pi1 = build_tensor(TensorKind::pi1, spec);
  PoissonTensor pi2 = build_tensor(TensorKind::pi2, spec);
  for (const auto& [name, c] : fam.casimirs) {
    const PoissonTensor& t = name.rfind("pi1:", 0) == 0 ? pi1 : pi2;
    VectorField x = hamiltonian_vf(t, c, name);
    add_zero(rep, "poisson.casimir." + name, spec.label(), x);
  }
  return rep;
}

CheckReport lenard_checks(const SystemSpec& spec, const InvariantFamily& fam) {
  CheckReport rep;
  const std::string d = spec.label();
  PoissonTensor pi1 = build_tensor(TensorKind::pi1, spec);
  PoissonTensor pi2 = build_tensor(TensorKind::pi2, spec);
  auto even = even_hamiltonians(spec, fam);
  add_zero(rep, "lenard.a98", d, hamiltonian_vf(pi1, even.at(2)) - hamiltonian_vf(pi2, fam.H.at(1)));
  if (spec.periodic()) return rep;
  PoissonTensor pi3 = build_tensor(TensorKind::pi3, spec);
  for (const auto& [k, h] : even) {
    if (k < 4 || !even.count(k - 2)) continue;
    add_zero(rep, tag("lenard.H", k), d, hamiltonian_vf(pi1, h) - hamiltonian_vf(pi3, even.at(k - 2)));
  }
  return rep;
}

CheckReport involution_checks(const SystemSpec& spec, const InvariantFamily& fam) {
  CheckReport rep;
  const std::string d = spec.label();
  PoissonTensor pi1 = build_tensor(TensorKind::pi1, spec);
  auto even = even_hamiltonians(spec, fam);
  for (auto it = even.begin(); it != even.end(); ++it) {
    for (auto jt = std::next(it); jt != even.end(); ++jt) {
      add_zero(rep, tag("involution.H", it->first) + tag(".H", jt->first), d, bracket(pi1, it->second, jt->second));
    }
  }
  if (spec.periodic() && spec.flips() % 2 == 1) return rep;
  for (const auto& [j, ij] : fam.I) {
    for (const auto& [k, hk] : even) {
      add_zero(rep, tag("involution.I", j) + tag(".H", k), d, bracket(pi1, ij, hk));
    }
  }
  return rep;
}

CheckReport complex_equivalence_check(const SystemSpec& spec) {
  CheckReport rep;
  PoissonTensor adler = build_tensor(TensorKind::adler, spec);
  PoissonTensor pi2 = build_tensor(TensorKind::pi2, spec);
  add_zero(rep, "poisson.complex_equivalence", spec.label(), difference(complex_change(adler, spec), pi2));
  return rep;
}

CheckReport symmetry_relation_check(const SystemSpec& spec, const InvariantFamily& fam) {
  CheckReport rep;
  if (spec.periodic()) return rep;
  const std::string d = spec.label();
  const int N = spec.N();
  VectorField x1 = build_field(FieldKind::X1, spec);
  VectorField ab = build_field(FieldKind::X1AlphaBeta, spec);
  PoissonTensor pi1 = build_tensor(TensorKind::pi1, spec);
  PoissonTensor pi2 = build_tensor(TensorKind::pi2, spec);
  PoissonTensor pi3 = build_tensor(TensorKind::pi3, spec);
  VectorField shift = scaled(hamiltonian_vf(pi1, quadratic_hamiltonian(spec)), Polynomial(Coefficient::rational(N + 2, 2)));
  add_zero(rep, "symmetry.X1.alpha_beta", d, x1 - ab + shift);
  for (int j = 1; j < N; ++j) {
    add_zero(rep, tag("symmetry.X1.I", j), d, apply(x1, fam.I.at(j)) - Polynomial(j + 1) * fam.I.at(j + 1));
  }
  add_zero(rep, "symmetry.lie_X1.pi1", d, difference(lie_derivative(x1, pi1), scaled(pi2, Polynomial(-2))));
  add_zero(rep, "symmetry.lie_X1.pi2", d, difference(lie_derivative(x1, pi2), scaled(pi3, Polynomial(-1))));
  add_zero(rep, "symmetry.lie_X1.pi3", d, lie_derivative(x1, pi3));
  return rep;
}

CheckReport deformation_checks(const SystemSpec& spec, int max_order) {
  CheckReport rep;
  if (spec.periodic()) return rep;
  const std::string d = spec.label();
  RecursionOperator r = build_recursion(spec);
  PoissonTensor j1 = build_tensor(TensorKind::J1, spec);
  std::vector<PoissonTensor> J = {j1, j1};
  for (int k = 2; k <= max_order; ++k) {
    PoissonTensor t = recursion_apply(r, J[static_cast<std::size_t>(k - 1)]);
    t.name = tag("J", k);
    J.push_back(t);
  }
  std::vector<VectorField> Z;
  for (int i = 0; i <= max_order; ++i) Z.push_back(build_field(FieldKind::Z, spec, i));
  std::vector<Polynomial> h = canonical_hamiltonians(spec, max_order);
  h.insert(h.begin(), Polynomial());
  auto hj = [&](int j) { return h[static_cast<std::size_t>(j)]; };
  auto zi = [&](int i) { return Z[static_cast<std::size_t>(i)]; };
  auto jj = [&](int j) { return J[static_cast<std::size_t>(j)]; };

  add_zero(rep, "symmetry.oevel.lambda", d, difference(lie_derivative(zi(0), jj(1)), scaled(jj(1), Polynomial(-1))));
  add_zero(rep, "symmetry.oevel.mu", d, lie_derivative(zi(0), build_tensor(TensorKind::J2, spec)));
  add_zero(rep, "symmetry.oevel.nu", d, apply(zi(0), hj(1)) - hj(1));
  add_zero(rep, "symmetry.Z0.h2", d, apply(zi(0), hj(2)) - Polynomial(2) * hj(2));
  for (int i = 0; i <= max_order; ++i) {
    for (int j = 1; i + j <= max_order; ++j) {
      std::string ij = std::to_string(i) + "." + std::to_string(j);
      add_zero(rep, "symmetry.deform.h." + ij, d, apply(zi(i), hj(j)) - Polynomial(i + j) * hj(i + j));
      add_zero(rep, "symmetry.deform.J." + ij, d,
               difference(lie_derivative(zi(i), jj(j)), scaled(jj(i + j), Polynomial(j - i - 2))));
    }
    for (int j = i + 1; i + j <= max_order; ++j) {
      std::string ij = std::to_string(i) + "." + std::to_string(j);
      add_zero(rep, "symmetry.deform.Z." + ij, d, vf_bracket(zi(i), zi(j)) - scaled(zi(i + j), Polynomial(j - i)));
    }
  }
  return rep;
}

CheckReport pushforward_symbolic_check(const SystemSpec& spec) {
  CheckReport rep;
  const std::string d = spec.label();
  add_zero(rep, "flaschka.symbolic.J1", d,
           difference(push_forward(spec, build_tensor(TensorKind::J1, spec)), build_tensor(TensorKind::pi1, spec)));
  if (!spec.periodic()) {
    add_zero(rep, "flaschka.symbolic.J2", d,
             difference(push_forward(spec, build_tensor(TensorKind::J2, spec)), build_tensor(TensorKind::pi2, spec)));
  }
  return rep;
}

}  // namespace sopq
