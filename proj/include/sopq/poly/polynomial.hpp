#pragma once

#include "sopq/poly/coefficient.hpp"
#include "sopq/poly/generators.hpp"
#include "sopq/poly/monomial.hpp"

#include <map>
#include <string>
#include <string_view>

namespace sopq {

/// Exact multivariate polynomial with Gaussian-rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficients, monomials ordered
/// by GrlexGreater. A polynomial is tied to the Universe it was built in;
/// constants carry no universe and combine with anything. Mixing two
/// different universes throws StructuralError.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Coefficient, GrlexGreater>;

  Polynomial() = default;
  Polynomial(const Coefficient& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Coefficient(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Coefficient(static_cast<long>(c))) {}  // NOLINT

  static Polynomial generator(const UniverseRef& u, GenId g);
  static Polynomial generator(const UniverseRef& u, std::string_view name);
  static Polynomial term(const UniverseRef& u, const Coefficient& c, const Monomial& m);

  const UniverseRef& universe() const { return universe_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Coefficient constant_term() const;
  Coefficient coefficient(const Monomial& m) const;
  unsigned degree() const;
  bool is_real() const;
  Polynomial real_part() const;
  Polynomial imag_part() const;
  /// Leading term in grlex order; the polynomial must be nonzero.
  const std::pair<const Monomial, Coefficient>& leading_term() const;

  /// Binds a constant to a universe (no-op for non-constants of that universe).
  Polynomial in(const UniverseRef& u) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& scale(const Coefficient& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned e) const;

  /// Canonical text form, e.g. "a1^2 - 1/2*a1*b2 + 3/2*i*b1 - 2".
  std::string to_string() const;

 private:
  void adopt(const Polynomial& o);
  void add_term(const Monomial& m, const Coefficient& c);

  Terms terms_;
  UniverseRef universe_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Combined universe of two operands; throws StructuralError on mismatch.
UniverseRef common_universe(const UniverseRef& x, const UniverseRef& y);

/// num / den when den divides num exactly in the polynomial ring; throws
/// StructuralError otherwise.
Polynomial exact_quotient(const Polynomial& num, const Polynomial& den);

/// Full evaluation; every generator of f must be assigned.
Coefficient evaluate(const Polynomial& f, const std::map<GenId, Coefficient>& point);

/// Ring homomorphism fixing coefficients and sending each generator to its
/// image. Generators without an image map to themselves and must then exist
/// in `target`.
Polynomial substitute(const Polynomial& f, const std::map<GenId, Polynomial>& images,
                      const UniverseRef& target);

}  // namespace sopq
