#pragma once

#include "sopq/poly/polynomial.hpp"

#include <span>
#include <vector>

namespace sopq {

/// A real Polynomial compiled for repeated double-precision evaluation.
/// `layout` gives the generator stored at each slot of the input vector.
class NumericPolynomial {
 public:
  NumericPolynomial() = default;
  /// Throws StructuralError if f has a non-real coefficient or mentions a
  /// generator missing from the layout.
  NumericPolynomial(const Polynomial& f, std::span<const GenId> layout);

  double operator()(std::span<const double> x) const;

 private:
  struct Term {
    double coef;
    std::vector<std::pair<std::size_t, unsigned>> powers;
  };
  std::vector<Term> terms_;
};

/// Compiles every component of a vector of polynomials against one layout.
class NumericField {
 public:
  NumericField() = default;
  NumericField(std::span<const Polynomial> components, std::span<const GenId> layout);

  std::size_t size() const { return parts_.size(); }
  void eval(std::span<const double> x, std::span<double> out) const;
  std::vector<double> operator()(std::span<const double> x) const;

 private:
  std::vector<NumericPolynomial> parts_;
};

}  // namespace sopq
