#pragma once

#include "sopq/lax/lax_pair.hpp"
#include "sopq/poisson/chart.hpp"
#include "sopq/report.hpp"

#include <string>
#include <vector>

namespace sopq {

enum class TensorKind { pi1, pi2, pi3, adler, J1, J2 };

std::string to_string(TensorKind k);

/// Antisymmetric bivector over a chart.
struct PoissonTensor {
  std::string name;
  ChartRef chart;
  PMatrix entries;

  std::size_t dim() const { return entries.rows(); }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
};

/// pi1/pi2/pi3/adler live on (a, b), J1/J2 on (q, p). Throws UnsupportedError
/// for pi3 or J2 on periodic specs.
PoissonTensor build_tensor(TensorKind kind, const SystemSpec& spec);

/// Sets {x_i, x_j} = v and {x_j, x_i} = -v.
void set_bracket(PoissonTensor& t, GenId xi, GenId xj, const Polynomial& v);

bool is_antisymmetric(const PoissonTensor& t);

/// grad f . pi . grad g.
Polynomial bracket(const PoissonTensor& t, const Polynomial& f, const Polynomial& g);

/// pi . grad H.
std::vector<Polynomial> hamiltonian_components(const PoissonTensor& t, const Polynomial& h);

struct TrivectorComponent {
  std::size_t i, j, k;
  Polynomial value;
};

/// Non-zero components T^{ijk}, i < j < k, of
///   sum_l pi^{il} d_l pi^{jk} + pi^{jl} d_l pi^{ki} + pi^{kl} d_l pi^{ij}.
std::vector<TrivectorComponent> jacobi_trivector(const PoissonTensor& t);

CheckReport jacobi_check(const PoissonTensor& t, const std::string& detail = {});

/// Jacobi identity for the sum; throws StructuralError on differing charts.
CheckReport pencil_compat_check(const PoissonTensor& t, const PoissonTensor& r, const std::string& detail = {});

PoissonTensor operator+(const PoissonTensor& t, const PoissonTensor& r);
PoissonTensor scaled(const PoissonTensor& t, const Polynomial& c);

/// The change of variables a_j -> c_j a_j (c_j = i where eps_j = -1) applied
/// to a bivector: substitute into entry (k, l), then divide by c_k c_l.
PoissonTensor complex_change(const PoissonTensor& t, const SystemSpec& spec);

/// Adler's bracket at N = 2 with the sign of {a1, b1} flipped; not Poisson.
PoissonTensor mutated_adler();

std::string tensor_text(const PoissonTensor& t);

}  // namespace sopq
