#include "sopq/flows/independence.hpp"

#include "sopq/lax/equations.hpp"
#include "sopq/poly/errors.hpp"

namespace sopq {

std::size_t independence_rank(const SystemSpec& spec, const std::vector<Coefficient>& a,
                              const std::vector<Coefficient>& b) {
  if (!spec.is_block()) throw UnsupportedError("independence check needs a block spec");
  if (a.size() != static_cast<std::size_t>(spec.K()) || b.size() != static_cast<std::size_t>(spec.N())) {
    throw UnsupportedError("point has the wrong dimension");
  }
  std::map<GenId, Coefficient> point;
  for (int i = 1; i <= spec.K(); ++i) point[gen_a(i)] = a[static_cast<std::size_t>(i - 1)];
  for (int i = 1; i <= spec.N(); ++i) point[gen_b(i)] = b[static_cast<std::size_t>(i - 1)];
  InvariantFamily fam = invariants(spec);
  const std::vector<GenId> coords = spec.phase_coords();
  const auto rows = static_cast<std::size_t>(spec.N() - 1);
  Matrix<Coefficient> jac(rows, coords.size());
  for (std::size_t r = 0; r < rows; ++r) {
    auto grad = gradient(fam.H.at(2 * static_cast<int>(r + 1)), coords, spec.phase_universe());
    for (std::size_t c = 0; c < coords.size(); ++c) jac(r, c) = evaluate(grad[c], point);
  }
  return rank(jac);
}

CheckReport independence_check(const SystemSpec& spec) {
  std::vector<Coefficient> a(static_cast<std::size_t>(spec.K()), Coefficient(0));
  std::vector<Coefficient> b;
  for (int i = 1; i <= spec.N(); ++i) b.emplace_back(static_cast<long>(i));
  std::size_t r = independence_rank(spec, a, b);
  CheckReport rep;
  rep.add("flows.independence", spec.label() + " a=0 b=1..N", r == static_cast<std::size_t>(spec.N() - 1),
          "rank " + std::to_string(r));
  return rep;
}

}  // namespace sopq
