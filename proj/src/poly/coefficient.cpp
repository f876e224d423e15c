#include "sopq/poly/coefficient.hpp"

#include "sopq/poly/errors.hpp"

#include <utility>

namespace sopq {

Coefficient::Coefficient(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coefficient Coefficient::rational(long num, long den) {
  if (den == 0) throw StructuralError("rational coefficient with zero denominator");
  return Coefficient(mpq_class(mpz_class(num), mpz_class(den)));
}

double Coefficient::to_double() const {
  if (!is_real()) throw StructuralError("coefficient " + to_string() + " is not real");
  return re_.get_d();
}

std::string Coefficient::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "*i";
  }
  std::string s = "(" + re_.get_str();
  if (sgn(im_) > 0) s += "+";
  if (im_ == 1) {
    s += "i";
  } else if (im_ == -1) {
    s += "-i";
  } else {
    s += im_.get_str() + "*i";
  }
  return s + ")";
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_zero()) throw StructuralError("division by zero coefficient");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

}  // namespace sopq
