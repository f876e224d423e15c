#pragma once

#include "sopq/lax/lax_pair.hpp"
#include "sopq/poly/parse.hpp"

#include <vector>

namespace golden {

inline sopq::PMatrix parse_matrix(const std::vector<std::vector<const char*>>& rows, const sopq::UniverseRef& u) {
  sopq::PMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = sopq::parse_polynomial(rows[i][j], u);
  }
  return m;
}

template <std::size_t N>
sopq::PMatrix parse_matrix(const char* const (&rows)[N][N], const sopq::UniverseRef& u) {
  sopq::PMatrix m(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) m(i, j) = sopq::parse_polynomial(rows[i][j], u);
  }
  return m;
}

inline std::vector<sopq::Polynomial> parse_column(const std::vector<std::vector<const char*>>& rows,
                                                  const sopq::UniverseRef& u) {
  std::vector<sopq::Polynomial> v;
  for (const auto& r : rows) v.push_back(sopq::parse_polynomial(r.front(), u));
  return v;
}

}  // namespace golden
