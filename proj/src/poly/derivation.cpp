#include "sopq/poly/derivation.hpp"

#include "sopq/poly/errors.hpp"

namespace sopq {

Derivation::Derivation(std::string name, UniverseRef universe)
    : name_(std::move(name)), universe_(std::move(universe)) {}

Derivation Derivation::partial(const UniverseRef& universe, GenId wrt) {
  if (!universe->contains(wrt)) {
    throw StructuralError("d/d" + gen_name(wrt) + ": generator not in " + universe->describe());
  }
  Derivation d("d/d" + gen_name(wrt), universe);
  for (GenId g : universe->generators()) d.images_[g] = Polynomial(g == wrt ? 1 : 0);
  return d;
}

Derivation& Derivation::set_image(GenId g, Polynomial image) {
  images_[g] = image.in(universe_);
  return *this;
}

Polynomial Derivation::apply(const Polynomial& f) const {
  Polynomial result = Polynomial().in(common_universe(f.universe(), universe_));
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [g, e] : m.factors()) {
      auto it = images_.find(g);
      if (it == images_.end()) {
        throw StructuralError(name_ + " has no image for generator " + gen_name(g));
      }
      const Polynomial& image = it->second;
      if (image.is_zero()) continue;
      Coefficient k = c * Coefficient(static_cast<long>(e));
      result += Polynomial::term(result.universe(), k, m.lowered(g)) * image;
    }
  }
  return result;
}

}  // namespace sopq
