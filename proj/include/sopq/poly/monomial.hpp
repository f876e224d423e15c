#pragma once

#include "sopq/poly/generators.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sopq {

/// Power product of generators; factors are sorted by generator id and never
/// carry a zero exponent.
class Monomial {
 public:
  using Factor = std::pair<GenId, std::uint16_t>;

  Monomial() = default;
  static Monomial of(GenId g, unsigned exponent = 1);

  std::span<const Factor> factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(GenId g) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// this / other when other divides this.
  std::optional<Monomial> divide(const Monomial& other) const;
  /// Lowers the exponent of g by one; g must be present.
  Monomial lowered(GenId g) const;

  /// "a1^2*b3"; the empty monomial renders as "1".
  std::string to_string() const;

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.factors_ == y.factors_; }

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order, greatest first (a1 > a2 > ... > b1 > ...).
struct GrlexGreater {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

}  // namespace sopq
