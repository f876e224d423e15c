#include "sopq/poly/polynomial.hpp"

#include "sopq/poly/errors.hpp"

#include <vector>

namespace sopq {

UniverseRef common_universe(const UniverseRef& x, const UniverseRef& y) {
  if (!x) return y;
  if (!y || x == y) return x;
  throw StructuralError("generator universe mismatch: " + x->describe() + " vs " + y->describe());
}

Polynomial::Polynomial(const Coefficient& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::generator(const UniverseRef& u, GenId g) {
  return term(u, Coefficient(1), Monomial::of(g));
}

Polynomial Polynomial::generator(const UniverseRef& u, std::string_view name) {
  auto g = parse_gen_name(name);
  if (!g) throw StructuralError("not a generator name: " + std::string(name));
  return generator(u, *g);
}

Polynomial Polynomial::term(const UniverseRef& u, const Coefficient& c, const Monomial& m) {
  if (!u) throw StructuralError("generator requires a universe");
  for (const auto& [g, e] : m.factors()) {
    if (!u->contains(g)) {
      throw StructuralError("generator " + gen_name(g) + " not in universe " + u->describe());
    }
  }
  Polynomial p;
  p.universe_ = u;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Coefficient Polynomial::constant_term() const { return coefficient(Monomial()); }

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

unsigned Polynomial::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

bool Polynomial::is_real() const {
  for (const auto& [m, c] : terms_) {
    if (!c.is_real()) return false;
  }
  return true;
}

Polynomial Polynomial::real_part() const {
  Polynomial r;
  r.universe_ = universe_;
  for (const auto& [m, c] : terms_) {
    if (sgn(c.re()) != 0) r.terms_.emplace(m, c.real_part());
  }
  return r;
}

Polynomial Polynomial::imag_part() const {
  Polynomial r;
  r.universe_ = universe_;
  for (const auto& [m, c] : terms_) {
    if (sgn(c.im()) != 0) r.terms_.emplace(m, c.imag_part());
  }
  return r;
}

const std::pair<const Monomial, Coefficient>& Polynomial::leading_term() const {
  if (terms_.empty()) throw StructuralError("zero polynomial has no leading term");
  return *terms_.begin();
}

Polynomial Polynomial::in(const UniverseRef& u) const {
  Polynomial r = *this;
  r.universe_ = common_universe(universe_, u);
  return r;
}

void Polynomial::adopt(const Polynomial& o) { universe_ = common_universe(universe_, o.universe_); }

void Polynomial::add_term(const Monomial& m, const Coefficient& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  adopt(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  adopt(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::scale(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.universe_ = common_universe(a.universe_, b.universe_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.is_constant()) {
    r.terms_ = b.terms_;
    return r.scale(a.terms_.begin()->second);
  }
  if (b.is_constant()) {
    r.terms_ = a.terms_;
    return r.scale(b.terms_.begin()->second);
  }
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  result.universe_ = universe_;
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string t;
    if (m.is_one()) {
      t = c.to_string();
    } else if (c.is_one()) {
      t = m.to_string();
    } else if (c.is_minus_one()) {
      t = "-" + m.to_string();
    } else {
      t = c.to_string() + "*" + m.to_string();
    }
    if (first) {
      out = t;
      first = false;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw StructuralError("division by the zero polynomial");
  UniverseRef u = common_universe(num.universe(), den.universe());
  Polynomial quotient = Polynomial().in(u);
  Polynomial rest = num;
  const auto& [lead_m, lead_c] = den.leading_term();
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_term();
    auto q = m.divide(lead_m);
    if (!q) {
      throw StructuralError("polynomial division is not exact: (" + num.to_string() + ") / (" +
                            den.to_string() + ")");
    }
    Coefficient qc = c / lead_c;
    Polynomial t = u ? Polynomial::term(u, qc, *q) : Polynomial(qc);
    quotient += t;
    rest -= t * den;
  }
  return quotient;
}

Coefficient evaluate(const Polynomial& f, const std::map<GenId, Coefficient>& point) {
  Coefficient total;
  for (const auto& [m, c] : f.terms()) {
    Coefficient v = c;
    for (const auto& [g, e] : m.factors()) {
      auto it = point.find(g);
      if (it == point.end()) {
        throw StructuralError("evaluation point has no value for " + gen_name(g));
      }
      for (unsigned k = 0; k < e; ++k) v *= it->second;
    }
    total += v;
  }
  return total;
}

Polynomial substitute(const Polynomial& f, const std::map<GenId, Polynomial>& images,
                      const UniverseRef& target) {
  std::map<GenId, std::vector<Polynomial>> powers;
  auto power_of = [&](GenId g, unsigned e) -> const Polynomial& {
    auto& table = powers[g];
    if (table.empty()) {
      auto it = images.find(g);
      Polynomial base = it != images.end() ? it->second.in(target)
                                           : Polynomial::generator(target, g);
      table.push_back(Polynomial(1).in(target));
      table.push_back(std::move(base));
    }
    while (table.size() <= e) table.push_back(table.back() * table[1]);
    return table[e];
  };
  Polynomial result = Polynomial().in(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial(c).in(target);
    for (const auto& [g, e] : m.factors()) t *= power_of(g, e);
    result += t;
  }
  return result;
}

}  // namespace sopq
