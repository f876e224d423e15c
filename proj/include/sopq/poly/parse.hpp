#pragma once

#include "sopq/poly/polynomial.hpp"

#include <string_view>

namespace sopq {

/// Reads the canonical text form back, plus the usual infix conveniences:
/// + - * / ^, parentheses, integer literals, the imaginary unit `i` and
/// generator names such as a1, b12, u3. Division is only allowed by nonzero
/// constants. Throws StructuralError on malformed input or on generators that
/// are not in `universe` (which may be null for constant expressions).
Polynomial parse_polynomial(std::string_view text, const UniverseRef& universe);

}  // namespace sopq
