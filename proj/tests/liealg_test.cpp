#include "doctest.h"

#include "sopq/liealg/root_data.hpp"
#include "sopq/poly/errors.hpp"

using namespace sopq;

TEST_CASE("so(6,5) root data") {
  RootDatum rd = build_so_pq_root_data({3, 2}, false);
  // dim so(11) = 11*10/2, counted independently of the builder.
  std::size_t expected = 0;
  for (int i = 1; i <= 11; ++i) expected += static_cast<std::size_t>(11 - i);
  CHECK(rd.basis.size() == expected);
  CHECK(rd.basis.size() == 55);
  REQUIRE(rd.simple_roots.size() == 4);
  Coefficient i = Coefficient::imaginary_unit();
  std::vector<Coefficient> alpha1{-i, -i, Coefficient(), Coefficient(), Coefficient()};
  CHECK(rd.simple_roots[0] == alpha1);
  std::vector<Coefficient> alpha2{Coefficient(), i, i, Coefficient(), Coefficient()};
  CHECK(rd.simple_roots[1] == alpha2);
  CHECK(verify_kronecker_forms(rd).ok());
  CHECK(verify_root_structure(rd).ok());
  // Type (a) elements come first.
  CHECK(rd.basis_labels.front() == std::pair{1, 2});
  CHECK(rd.basis_labels.back() == std::pair{6, 11});
}

TEST_CASE("X_m is symmetric at the flip position") {
  RootDatum rd = build_so_pq_root_data({1, 1}, false);
  const CMatrix& x = rd.kron_parts[0].terms[0].first;
  CHECK(x(0, 1) == Coefficient::rational(1, 2));
  CHECK(x(1, 0) == Coefficient::rational(1, 2));
  CHECK(verify_kronecker_forms(rd).ok());
  CHECK(verify_root_structure(rd).ok());
}

TEST_CASE("Cartan elements equal d_kk (x) J") {
  RootDatum rd = build_so_pq_root_data({2, 1}, false);
  const CMatrix h2 = rd.cartan[1].trimmed();
  CHECK(h2(2, 3) == Coefficient(1));
  CHECK(h2(3, 2) == Coefficient(-1));
}

TEST_CASE("flipped J_k is detected") {
  RootDatum rd = build_so_pq_root_data({3, 2}, false);
  rd.kron_parts[2].terms[0].second = -rd.kron_parts[2].terms[0].second;
  CheckReport rep = verify_kronecker_forms(rd);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.failures() == 1);
  for (const auto& item : rep.items) {
    if (!item.pass) CHECK(item.detail == "k=3");
  }
}

TEST_CASE("periodic root data") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n + m <= 6; ++n) {
      RootDatum rd = build_so_pq_root_data({m, n}, true);
      const int N = m + n;
      REQUIRE(rd.simple_roots.size() == static_cast<std::size_t>(N));
      Coefficient i = Coefficient::imaginary_unit();
      CHECK(rd.simple_roots.back().front() == i);
      CHECK(rd.simple_roots.back().back() == (N % 2 == 0 ? i : -i));
      CHECK(verify_kronecker_forms(rd).ok());
      CHECK(verify_root_structure(rd).ok());
    }
  }
}

TEST_CASE("invalid sizes") {
  CHECK_THROWS_AS(build_so_pq_root_data({1, 0}, false), UnsupportedError);
  CHECK_THROWS_AS(build_so_pq_root_data({0, 2}, false), UnsupportedError);
  CHECK_NOTHROW(build_so_pq_root_data({2, 0}, false));
}
