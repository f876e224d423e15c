#include "sopq/poisson/chart.hpp"

#include "sopq/poly/errors.hpp"

#include <algorithm>

namespace sopq {

std::shared_ptr<const Chart> Chart::phase(const SystemSpec& spec) {
  auto c = std::make_shared<Chart>();
  c->universe_ = spec.phase_universe();
  c->coords_ = spec.phase_coords();
  for (GenId g : c->coords_) c->partials_.push_back(Derivation::partial(c->universe_, g));
  return c;
}

std::shared_ptr<const Chart> Chart::canonical(const SystemSpec& spec) {
  auto c = std::make_shared<Chart>();
  c->canonical_ = true;
  c->universe_ = spec.canonical_universe();
  c->coords_ = spec.canonical_coords();
  const int N = spec.N();
  for (GenId g : c->coords_) {
    Derivation d = Derivation::partial(c->universe_, g);
    if (gen_kind(g) == GenKind::q) {
      int k = gen_index(g);
      for (int i = 1; i <= spec.K(); ++i) {
        Polynomial u = Polynomial::generator(c->universe_, gen_u(i));
        if (k == i) {
          d.set_image(gen_u(i), u);
        } else if (k == i % N + 1) {
          d.set_image(gen_u(i), -u);
        }
      }
    }
    c->partials_.push_back(std::move(d));
  }
  return c;
}

std::vector<Polynomial> Chart::gradient(const Polynomial& f) const {
  std::vector<Polynomial> g;
  g.reserve(partials_.size());
  for (const Derivation& d : partials_) g.push_back(d(f));
  return g;
}

std::size_t Chart::index(GenId g) const {
  auto it = std::find(coords_.begin(), coords_.end(), g);
  if (it == coords_.end()) throw StructuralError("coordinate " + gen_name(g) + " not in chart");
  return static_cast<std::size_t>(it - coords_.begin());
}

}  // namespace sopq
