#pragma once

#include "sopq/poisson/vector_field.hpp"

namespace sopq {

enum class FieldKind { X1, X1AlphaBeta, X2, Z };

/// Z0 = sum (N - 2i + 1) d/dq_i + sum p_i d/dp_i; Z_i = R^i Z0 (canonical).
/// X1 and X2 are the Flaschka images of Z_1 and Z_2. X1AlphaBeta is the field
/// sum alpha_n d/da_n + beta_n d/db_n with
///   alpha_n = -n a_n b_n + (n+2) a_n b_{n+1}
///   beta_n  = (2n+3) eps_n a_n^2 + (1-2n) eps_{n-1} a_{n-1}^2 + b_n^2.
/// `index` selects i for FieldKind::Z.
VectorField build_field(FieldKind kind, const SystemSpec& spec, int index = 0);

}  // namespace sopq
