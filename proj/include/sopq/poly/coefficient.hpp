#pragma once

#include <gmpxx.h>

#include <string>

namespace sopq {

/// Exact Gaussian rational re + im*i with arbitrary-precision numerators and
/// denominators.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Coefficient(mpq_class re, mpq_class im = 0);

  static Coefficient rational(long num, long den);
  static Coefficient imaginary_unit() { return Coefficient(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_minus_one() const { return re_ == -1 && sgn(im_) == 0; }

  Coefficient conj() const { return Coefficient(re_, -im_); }
  Coefficient real_part() const { return Coefficient(re_, 0); }
  Coefficient imag_part() const { return Coefficient(im_, 0); }

  /// Real value; throws StructuralError when the imaginary part is nonzero.
  double to_double() const;

  /// Canonical text: "p/q", "p/q*i", or "(p/q+r/s*i)".
  std::string to_string() const;

  Coefficient operator-() const { return Coefficient(-re_, -im_); }
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_;
  mpq_class im_;
};

inline bool is_zero(const Coefficient& c) { return c.is_zero(); }

/// Field division; fraction-free elimination calls this for exact quotients.
inline Coefficient exact_quotient(const Coefficient& num, const Coefficient& den) {
  return num / den;
}

}  // namespace sopq
