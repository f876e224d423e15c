#include "sopq/poly/numeric.hpp"

#include "sopq/poly/errors.hpp"

#include <algorithm>

namespace sopq {

NumericPolynomial::NumericPolynomial(const Polynomial& f, std::span<const GenId> layout) {
  for (const auto& [m, c] : f.terms()) {
    if (!c.is_real()) throw StructuralError("cannot compile non-real polynomial " + f.to_string());
    Term t{c.to_double(), {}};
    for (const auto& [g, e] : m.factors()) {
      auto it = std::find(layout.begin(), layout.end(), g);
      if (it == layout.end()) throw StructuralError("generator " + gen_name(g) + " missing from layout");
      t.powers.emplace_back(static_cast<std::size_t>(it - layout.begin()), e);
    }
    terms_.push_back(std::move(t));
  }
}

double NumericPolynomial::operator()(std::span<const double> x) const {
  double total = 0.0;
  for (const Term& t : terms_) {
    double v = t.coef;
    for (const auto& [slot, e] : t.powers) {
      double base = x[slot];
      for (unsigned k = 0; k < e; ++k) v *= base;
    }
    total += v;
  }
  return total;
}

NumericField::NumericField(std::span<const Polynomial> components, std::span<const GenId> layout) {
  parts_.reserve(components.size());
  for (const Polynomial& f : components) parts_.emplace_back(f, layout);
}

void NumericField::eval(std::span<const double> x, std::span<double> out) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = parts_[i](x);
}

std::vector<double> NumericField::operator()(std::span<const double> x) const {
  std::vector<double> out(parts_.size());
  eval(x, out);
  return out;
}

}  // namespace sopq
