#pragma once

#include "sopq/poly/polynomial.hpp"

#include <map>
#include <string>

namespace sopq {

/// A derivation of the polynomial ring, fixed by the image of each generator
/// and extended by the Leibniz rule.
///
/// Ordinary partial derivatives send their own generator to 1 and every other
/// generator to 0. Exponential generators u_i = exp(q_i - q_{i+1}) are plain
/// generators whose image under d/dq_k is configured as +u_i, -u_i or 0, which
/// keeps derivatives of exponentials inside the ring.
class Derivation {
 public:
  Derivation(std::string name, UniverseRef universe);

  /// d/dx: image 1 for x, 0 for all other generators of the universe.
  static Derivation partial(const UniverseRef& universe, GenId wrt);

  Derivation& set_image(GenId g, Polynomial image);

  const std::string& name() const { return name_; }
  const UniverseRef& universe() const { return universe_; }

  /// Throws StructuralError if f mentions a generator without an image.
  Polynomial apply(const Polynomial& f) const;
  Polynomial operator()(const Polynomial& f) const { return apply(f); }

 private:
  std::string name_;
  UniverseRef universe_;
  std::map<GenId, Polynomial> images_;
};

}  // namespace sopq
