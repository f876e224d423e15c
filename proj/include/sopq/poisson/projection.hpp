#pragma once

#include "sopq/poisson/vector_field.hpp"

namespace sopq {

/// Jacobian of the Flaschka map F(q, p) = (a, b) written in (a, b):
/// da_i/dq_i = a_i/2, da_i/dq_{i+1} = -a_i/2, db_i/dp_i = -1/2.
/// Rows follow the phase chart, columns the canonical chart.
PMatrix flaschka_jacobian(const SystemSpec& spec);

/// Rewrites a polynomial in (p, u) as one in (a, b) via u_i = 4 a_i^2 and
/// p_i = -2 b_i. Throws StructuralError if any q_i remains.
Polynomial to_phase(const SystemSpec& spec, const Polynomial& f);

/// F_* Z = DF . Z.
VectorField push_forward(const SystemSpec& spec, const VectorField& z);

/// DF . J . DF^T.
PoissonTensor push_forward(const SystemSpec& spec, const PoissonTensor& t);

}  // namespace sopq
