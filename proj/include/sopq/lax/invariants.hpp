#pragma once

#include "sopq/lax/lax_pair.hpp"
#include "sopq/report.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sopq {

struct InvariantFamily {
  /// H_1 = sum b; H_{2i} = (-1)^i/(4i) tr L^{2i} for block specs.
  std::map<int, Polynomial> H;
  /// I_j = (1/j) tr M^j, j = 1..N.
  std::map<int, Polynomial> I;
  /// ("pi1:H1", ...), ("pi2:detL", ...), periodic ("pi1:prod_a", ...).
  std::vector<std::pair<std::string, Polynomial>> casimirs;
};

/// tr X^k for k = 1..kmax.
std::vector<Polynomial> power_traces(const PMatrix& x, int kmax);

/// Coefficients c_0..c_n of det(lambda I - X) = sum_k c_k lambda^{n-k} from
/// the power traces p_1..p_n (Newton's identities).
std::vector<Polynomial> charpoly_from_traces(const std::vector<Polynomial>& traces, std::size_t n);

InvariantFamily invariants(const SystemSpec& spec);

/// Symbolic trace identities: odd traces vanish, char poly is even,
/// Im(I_j) = 0, H_{2i} = I_{2i}, det L against det M, and for so(6,5) the
/// reference square root of det L and the H_6 relation.
CheckReport relation_checks(const SystemSpec& spec);

/// d/dt f = grad f . rhs is the zero polynomial for every family member.
CheckReport conservation_checks(const SystemSpec& spec);

/// The reference square root of det L for so(6,5), in phase coordinates.
Polynomial reference_sqrt_det_L(const SystemSpec& spec);

/// H_6 minus its expression in H_1, H_2, H_4, I_3, I_5 (so(6,5)).
Polynomial h6_relation_residual(const InvariantFamily& fam);

}  // namespace sopq
