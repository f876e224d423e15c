#pragma once

#include "sopq/lax/system_spec.hpp"
#include "sopq/poly/derivation.hpp"

#include <memory>
#include <vector>

namespace sopq {

/// Ordered coordinates plus the partial derivative along each of them.
/// The canonical chart (q, p) carries u_i = exp(q_i - q_{i+1}) as extra
/// generators whose q-derivatives are +-u_i.
class Chart {
 public:
  static std::shared_ptr<const Chart> phase(const SystemSpec& spec);
  static std::shared_ptr<const Chart> canonical(const SystemSpec& spec);

  const std::vector<GenId>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  const UniverseRef& universe() const { return universe_; }
  bool canonical_kind() const { return canonical_; }

  Polynomial partial(std::size_t c, const Polynomial& f) const { return partials_[c](f); }
  std::vector<Polynomial> gradient(const Polynomial& f) const;
  /// Index of a coordinate; throws StructuralError if absent.
  std::size_t index(GenId g) const;
  Polynomial coordinate(std::size_t c) const { return Polynomial::generator(universe_, coords_[c]); }

 private:
  std::vector<GenId> coords_;
  UniverseRef universe_;
  std::vector<Derivation> partials_;
  bool canonical_ = false;
};

using ChartRef = std::shared_ptr<const Chart>;

}  // namespace sopq
