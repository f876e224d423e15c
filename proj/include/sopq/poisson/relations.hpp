#pragma once

#include "sopq/lax/invariants.hpp"
#include "sopq/poisson/fields.hpp"
#include "sopq/report.hpp"

namespace sopq {

/// Antisymmetry and Jacobi for every tensor available on the spec, plus the
/// pencils (pi1,pi2), (pi1,pi3), (pi2,pi3) and (J1,J2).
CheckReport poisson_checks(const SystemSpec& spec);

/// pi . grad C = 0 for every Casimir of the invariant family.
CheckReport casimir_checks(const SystemSpec& spec, const InvariantFamily& fam);

/// pi1 grad H2 = pi2 grad H1 and pi1 grad H_{2i} = pi3 grad H_{2i-2}, i >= 2.
CheckReport lenard_checks(const SystemSpec& spec, const InvariantFamily& fam);

/// {H_{2i}, H_{2j}} = 0 and {I_j, H_{2k}} = 0 under pi1.
CheckReport involution_checks(const SystemSpec& spec, const InvariantFamily& fam);

/// a_m -> i a_m at the flipped positions carries Adler's bracket onto pi2.
CheckReport complex_equivalence_check(const SystemSpec& spec);

/// X1(I_j) = (j+1) I_{j+1}; L_X1 pi1 = -2 pi2, L_X1 pi2 = -pi3, L_X1 pi3 = 0;
/// X1 against the alpha-beta field. Non-periodic only.
CheckReport symmetry_relation_check(const SystemSpec& spec, const InvariantFamily& fam);

/// Canonical side: L_Z0 J1 = -J1, L_Z0 J2 = 0, Z0(h1) = h1, Z0(h2) = 2 h2,
/// and for i + j <= max_order
///   Z_i(h_j) = (i+j) h_{i+j}, L_{Z_i} J_j = (j-i-2) J_{i+j},
///   [Z_i, Z_j] = (j-i) Z_{i+j}.
CheckReport deformation_checks(const SystemSpec& spec, int max_order = 4);

/// DF J_k DF^T = pi_k o F as polynomials in (a, b), k = 1, 2.
CheckReport pushforward_symbolic_check(const SystemSpec& spec);

}  // namespace sopq
