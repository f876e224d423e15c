#pragma once

#include "sopq/lax/system_spec.hpp"

#include <vector>

namespace sopq {

/// Flow right-hand side in phase coordinates (a1..aK, b1..bN):
///   a_i' = a_i (b_{i+1} - b_i)
///   b_i' = 2 (eps_i a_i^2 - eps_{i-1} a_{i-1}^2)
/// with indices taken cyclically in the periodic case.
std::vector<Polynomial> equations_of_motion(const SystemSpec& spec);

/// 1/2 sum b_i^2 + sum eps_i a_i^2.
Polynomial quadratic_hamiltonian(const SystemSpec& spec);

/// sum b_i.
Polynomial linear_casimir(const SystemSpec& spec);

/// a_1 a_2 ... a_K.
Polynomial product_of_a(const SystemSpec& spec);

/// Directional derivative sum_c (df/dx_c) rhs_c over the phase coordinates.
Polynomial time_derivative(const SystemSpec& spec, const Polynomial& f, const std::vector<Polynomial>& rhs);

/// df/dx_c for every phase coordinate.
std::vector<Polynomial> gradient(const Polynomial& f, const std::vector<GenId>& coords, const UniverseRef& u);

}  // namespace sopq
