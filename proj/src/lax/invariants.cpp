#include "sopq/lax/invariants.hpp"

#include "sopq/lax/equations.hpp"
#include "sopq/poly/errors.hpp"
#include "sopq/poly/parse.hpp"

namespace sopq {
namespace {

Polynomial rational(long num, long den) { return Polynomial(Coefficient::rational(num, den)); }

bool odd_flip_periodic(const SystemSpec& spec) { return spec.periodic() && spec.flips() % 2 == 1; }

}  // namespace

std::vector<Polynomial> power_traces(const PMatrix& x, int kmax) {
  std::vector<Polynomial> t;
  PMatrix p = x;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) p = p * x;
    t.push_back(p.trace());
  }
  return t;
}

std::vector<Polynomial> charpoly_from_traces(const std::vector<Polynomial>& traces, std::size_t n) {
  if (traces.size() < n) throw StructuralError("need n power traces for a degree-n characteristic polynomial");
  std::vector<Polynomial> e{Polynomial(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial s;
    for (std::size_t i = 1; i <= k; ++i) {
      Polynomial term = e[k - i] * traces[i - 1];
      if (i % 2 == 0) term = -term;
      s += term;
    }
    e.push_back(s * rational(1, static_cast<long>(k)));
  }
  std::vector<Polynomial> c;
  for (std::size_t k = 0; k <= n; ++k) c.push_back(k % 2 == 0 ? e[k] : -e[k]);
  return c;
}

InvariantFamily invariants(const SystemSpec& spec) {
  InvariantFamily fam;
  const int N = spec.N();
  fam.H[1] = linear_casimir(spec);
  LaxPair tri = build_lax_tridiag(spec.as_pattern());
  auto mt = power_traces(tri.L, N);
  for (int j = 1; j <= N; ++j) fam.I[j] = mt[static_cast<std::size_t>(j - 1)] * rational(1, j);
  fam.casimirs.emplace_back("pi1:H1", fam.H[1]);
  if (spec.is_block()) {
    LaxPair pair = build_lax_block(spec);
    auto lt = power_traces(pair.L, 2 * (N - 1));
    for (int i = 1; i <= N - 1; ++i) {
      fam.H[2 * i] = lt[static_cast<std::size_t>(2 * i - 1)] * rational(i % 2 == 0 ? 1 : -1, 4L * i);
    }
    fam.casimirs.emplace_back("pi2:detL", determinant(pair.L));
  } else {
    fam.casimirs.emplace_back("pi2:detM", determinant(tri.L));
  }
  if (spec.periodic()) {
    fam.casimirs.emplace_back("pi1:prod_a", product_of_a(spec));
    fam.casimirs.emplace_back("pi2:prod_a", product_of_a(spec));
  }
  return fam;
}

Polynomial reference_sqrt_det_L(const SystemSpec& spec) {
  return parse_polynomial(
      "-b1*b2*b3*b4*b5 + b1*b2*b3*a4^2 - b1*b2*b5*a3^2 + b1*b4*b5*a2^2 - b1*a2^2*a4^2"
      " + b3*b4*b5*a1^2 - b3*a1^2*a4^2 + b5*a1^2*a3^2",
      spec.phase_universe());
}

Polynomial h6_relation_residual(const InvariantFamily& fam) {
  const Polynomial& h1 = fam.H.at(1);
  const Polynomial& h2 = fam.H.at(2);
  const Polynomial& h4 = fam.H.at(4);
  const Polynomial& i3 = fam.I.at(3);
  const Polynomial& i5 = fam.I.at(5);
  Polynomial rhs = rational(1, 720) * h1.pow(6) + h1 * i5 + h2 * h4 - rational(1, 2) * h1.pow(2) * h4 +
                   rational(1, 6) * h1.pow(3) * i3 - h1 * h2 * i3 - rational(1, 24) * h1.pow(4) * h2 -
                   rational(1, 6) * h2.pow(3) + rational(1, 2) * i3.pow(2) + rational(1, 4) * h1.pow(2) * h2.pow(2);
  return fam.H.at(6) - rhs;
}

CheckReport relation_checks(const SystemSpec& spec) {
  CheckReport rep;
  const int N = spec.N();
  const std::string label = spec.label();
  auto check = [&](const std::string& id, const std::string& detail, const Polynomial& residual) {
    rep.add(id, label + " " + detail, residual.is_zero(), residual.is_zero() ? "" : residual.to_string());
  };

  LaxPair tri = build_lax_tridiag(spec.as_pattern());
  auto mt = power_traces(tri.L, N);
  if (!odd_flip_periodic(spec)) {
    for (int j = 1; j <= N; ++j) {
      check("lax.trace.imag_I", "Im(I_" + std::to_string(j) + ")", mt[static_cast<std::size_t>(j - 1)].imag_part());
    }
  }
  if (!spec.is_block()) return rep;

  LaxPair pair = build_lax_block(spec);
  auto lt = power_traces(pair.L, 2 * N);
  for (int k = 1; k <= 2 * N; k += 2) {
    check("lax.trace.odd", "tr L^" + std::to_string(k), lt[static_cast<std::size_t>(k - 1)]);
  }
  auto cp = charpoly_from_traces(lt, static_cast<std::size_t>(2 * N));
  for (std::size_t k = 1; k < cp.size(); k += 2) check("lax.charpoly.even", "c_" + std::to_string(k), cp[k]);
  Polynomial det_l = determinant(pair.L);
  check("lax.det.newton", "det L = c_2N", det_l - cp.back());

  if (!spec.periodic()) {
    for (int i = 1; 2 * i <= N; ++i) {
      Polynomial h = lt[static_cast<std::size_t>(2 * i - 1)] * rational(i % 2 == 0 ? 1 : -1, 4L * i);
      Polynomial ii = mt[static_cast<std::size_t>(2 * i - 1)] * rational(1, 2L * i);
      check("lax.trace.H_equals_I", "H_" + std::to_string(2 * i) + " = I_" + std::to_string(2 * i), h - ii);
    }
    Polynomial det_m = determinant(tri.L);
    check("lax.det.square", "det L = (det M)^2", det_l - det_m * det_m);
    if (spec.N() == 5 && spec.m() == 3) {
      Polynomial root = reference_sqrt_det_L(spec);
      check("lax.det.sqrt_reference", "(sqrt det L)^2 = det L", root * root - det_l);
      check("lax.det.sqrt_reference", "sqrt det L = -det M", root + det_m);
      check("lax.h6_relation", "H_6 in H_1, H_2, H_4, I_3, I_5", h6_relation_residual(invariants(spec)));
    }
  }
  return rep;
}

CheckReport conservation_checks(const SystemSpec& spec) {
  CheckReport rep;
  InvariantFamily fam = invariants(spec);
  auto rhs = equations_of_motion(spec);
  auto check = [&](const std::string& name, const Polynomial& f) {
    Polynomial d = time_derivative(spec, f, rhs);
    rep.add("lax.conserved", spec.label() + " d" + name + "/dt", d.is_zero(), d.is_zero() ? "" : d.to_string());
  };
  for (const auto& [k, h] : fam.H) check("H_" + std::to_string(k), h);
  for (const auto& [k, f] : fam.I) check("I_" + std::to_string(k), f);
  return rep;
}

}  // namespace sopq
