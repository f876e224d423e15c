#pragma once

#include "sopq/poisson/vector_field.hpp"

#include <vector>

namespace sopq {

/// R = 1/2 [[B, -A], [C, B]] over (q, p); R J1 = J2.
struct RecursionOperator {
  ChartRef chart;
  PMatrix matrix;
};

RecursionOperator build_recursion(const SystemSpec& spec);

/// R^times applied as a matrix product (times = 0 is the identity).
PoissonTensor recursion_apply(const RecursionOperator& r, const PoissonTensor& t, int times = 1);
VectorField recursion_apply(const RecursionOperator& r, const VectorField& z, int times = 1);

/// h1 = -2 sum p_i.
Polynomial canonical_h1(const SystemSpec& spec);
/// h2 = 1/2 sum p_i^2 + sum eps_i u_i.
Polynomial canonical_h2(const SystemSpec& spec);
/// h_1..h_jmax with h_{j+1} = Z_1(h_j)/(j+1).
std::vector<Polynomial> canonical_hamiltonians(const SystemSpec& spec, int jmax);

}  // namespace sopq
