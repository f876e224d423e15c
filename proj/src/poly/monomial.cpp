#include "sopq/poly/monomial.hpp"

#include "sopq/poly/errors.hpp"

namespace sopq {

Monomial Monomial::of(GenId g, unsigned exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(g, static_cast<std::uint16_t>(exponent));
    m.degree_ = exponent;
  }
  return m;
}

unsigned Monomial::exponent(GenId g) const {
  for (const auto& [id, e] : factors_) {
    if (id == g) return e;
    if (id > g) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, static_cast<std::uint16_t>(i->second + j->second));
      ++i;
      ++j;
    }
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial r;
  auto j = other.factors_.begin();
  for (const auto& [id, e] : factors_) {
    if (j != other.factors_.end() && j->first < id) return std::nullopt;
    if (j != other.factors_.end() && j->first == id) {
      if (j->second > e) return std::nullopt;
      if (j->second < e) r.factors_.emplace_back(id, static_cast<std::uint16_t>(e - j->second));
      ++j;
    } else {
      r.factors_.emplace_back(id, e);
    }
  }
  if (j != other.factors_.end()) return std::nullopt;
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lowered(GenId g) const {
  Monomial r = *this;
  for (auto it = r.factors_.begin(); it != r.factors_.end(); ++it) {
    if (it->first == g) {
      if (--it->second == 0) r.factors_.erase(it);
      --r.degree_;
      return r;
    }
  }
  throw StructuralError("monomial " + to_string() + " has no factor " + gen_name(g));
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [id, e] : factors_) {
    if (!s.empty()) s += "*";
    s += gen_name(id);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool GrlexGreater::operator()(const Monomial& x, const Monomial& y) const {
  if (x.degree() != y.degree()) return x.degree() > y.degree();
  auto fx = x.factors();
  auto fy = y.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fx.size() && j < fy.size()) {
    if (fx[i].first != fy[j].first) return fx[i].first < fy[j].first;
    if (fx[i].second != fy[j].second) return fx[i].second > fy[j].second;
    ++i;
    ++j;
  }
  return i < fx.size() && j == fy.size();
}

}  // namespace sopq
