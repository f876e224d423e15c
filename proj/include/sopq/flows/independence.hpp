#pragma once

#include "sopq/lax/invariants.hpp"
#include "sopq/report.hpp"

#include <vector>

namespace sopq {

/// Exact rank of the Jacobian of (H_2, H_4, ..., H_{2(N-1)}) with respect to
/// (a, b) at a rational point. Block specs only.
std::size_t independence_rank(const SystemSpec& spec, const std::vector<Coefficient>& a,
                              const std::vector<Coefficient>& b);

/// Rank N-1 at a = 0, b = (1, 2, ..., N).
CheckReport independence_check(const SystemSpec& spec);

}  // namespace sopq
