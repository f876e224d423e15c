#pragma once

#include <stdexcept>
#include <string>

namespace sopq {

/// Operands that do not fit together: mismatched generator universes, missing
/// derivation images, non-exact divisions, malformed matrices.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A request outside what a builder supports (size, kind/spec combination).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Floating point evaluation left the representable range.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

}  // namespace sopq
