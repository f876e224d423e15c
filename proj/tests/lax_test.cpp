#include "doctest.h"
#include "golden_reference.hpp"
#include "golden_util.hpp"

#include "sopq/lax/equations.hpp"
#include "sopq/lax/invariants.hpp"
#include "sopq/lax/lax_pair.hpp"
#include "sopq/poly/errors.hpp"
#include "sopq/poly/parse.hpp"

using namespace sopq;

namespace {

std::vector<SystemSpec> block_specs(int max_n, bool periodic) {
  std::vector<SystemSpec> out;
  for (int N = 2; N <= max_n; ++N) {
    if (periodic && N < 3) continue;
    for (int m = 1; m <= N - 1; ++m) out.push_back(SystemSpec::block(N, m, periodic));
  }
  return out;
}

std::vector<SystemSpec> all_patterns(int N, bool periodic) {
  std::vector<SystemSpec> out;
  int k = periodic ? N : N - 1;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> eps;
    for (int j = 0; j < k; ++j) eps.push_back((mask >> j) & 1 ? -1 : 1);
    out.push_back(SystemSpec::pattern(eps, periodic));
  }
  return out;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_WITH_AS(SystemSpec::sopq(0, 2), "m must be ≥ 1", UnsupportedError);
  CHECK_THROWS_AS(SystemSpec::block(3, 3), UnsupportedError);
  CHECK_THROWS_AS(SystemSpec::block(1, 1), UnsupportedError);
  CHECK_THROWS_AS(SystemSpec::block(2, 1, true), UnsupportedError);
  CHECK_THROWS_AS(SystemSpec::pattern("+x", 3), UnsupportedError);
  CHECK_THROWS_AS(SystemSpec::pattern("+-+", 3), UnsupportedError);
  SystemSpec s = SystemSpec::sopq(3, 2);
  CHECK(s.N() == 5);
  CHECK(s.eps() == std::vector<int>{1, 1, -1, 1});
  CHECK(s.label() == "so(6,5)");
  CHECK(SystemSpec::sopq(3, 2, true).eps() == std::vector<int>{1, 1, -1, 1, -1});
  CHECK(SystemSpec::pattern("+-", 0, true).eps() == std::vector<int>{1, -1, -1});
}

TEST_CASE("so(6,5) block pair equals the reference matrices") {
  SystemSpec s = SystemSpec::sopq(3, 2);
  LaxPair pair = build_lax_block(s);
  CHECK(pair.L == golden::parse_matrix(golden::kL, s.phase_universe()));
  CHECK(pair.B == golden::parse_matrix(golden::kB, s.phase_universe()));
  CHECK(build_lax_block_roots(s).L == pair.L);
  CHECK(build_lax_block_roots(s).B == pair.B);
}

TEST_CASE("a = 0 leaves only the L1 part") {
  SystemSpec s = SystemSpec::sopq(2, 2);
  LaxPair pair = build_lax_block(s);
  std::map<GenId, Polynomial> zero_a;
  for (int i = 1; i <= s.K(); ++i) zero_a[gen_a(i)] = Polynomial();
  PMatrix l = pair.L.map([&](const Polynomial& p) { return substitute(p, zero_a, s.phase_universe()); });
  PMatrix expected(8, 8);
  for (int i = 1; i <= 4; ++i) {
    Polynomial d = (i % 2 ? Polynomial(1) : Polynomial(-1)) * s.b(i);
    expected(2 * i - 2, 2 * i - 1) = -d;
    expected(2 * i - 1, 2 * i - 2) = d;
  }
  CHECK(l == expected);
}

TEST_CASE("periodic corner blocks") {
  SystemSpec s = SystemSpec::block(3, 2, true);
  LaxPair pair = build_lax_block(s);
  // Hand-assembled: L3 (x) diag(1, (-1)^{N+1}) with corners (-1)^N a_N, N = 3.
  Polynomial a3 = s.a(3);
  CHECK(pair.L(0, 4) == -a3);
  CHECK(pair.L(1, 5) == -a3);
  CHECK(pair.L(4, 0) == -a3);
  CHECK(pair.L(5, 1) == -a3);
  // B2 (x) [[0,1],[(-1)^N,0]] with B2(1,N) = a_N and B2(N,1) = (-1)^N a_N.
  CHECK(pair.B(0, 5) == a3);
  CHECK(pair.B(1, 4) == -a3);
  CHECK(pair.B(4, 1) == -a3);
  CHECK(pair.B(5, 0) == a3);
}

TEST_CASE("Kronecker and root-space routes agree") {
  for (bool periodic : {false, true}) {
    for (const SystemSpec& s : block_specs(6, periodic)) {
      CAPTURE(s.label());
      CHECK(compare_block_routes(s).ok());
    }
  }
}

TEST_CASE("block pairs reproduce the equations of motion") {
  for (bool periodic : {false, true}) {
    for (const SystemSpec& s : block_specs(6, periodic)) {
      CAPTURE(s.label());
      CHECK(lax_consistency_check(build_lax_block(s), s).ok());
    }
  }
  SystemSpec s = SystemSpec::sopq(3, 2);
  auto flow = read_off_flow(build_lax_block(s), s);
  REQUIRE(flow);
  for (std::size_t c = 0; c < 9; ++c) CHECK((*flow)[c] == parse_polynomial(golden::kFlow65[c], s.phase_universe()));
}

TEST_CASE("periodic equations follow the closed form") {
  SystemSpec s = SystemSpec::block(5, 3, true);
  auto rhs = equations_of_motion(s);
  auto u = s.phase_universe();
  CHECK(rhs[4] == parse_polynomial("a5*(b1 - b5)", u));
  CHECK(rhs[5] == parse_polynomial("2*(a1^2 + a5^2)", u));
  CHECK(rhs[7] == parse_polynomial("-2*(a3^2 + a2^2)", u));
  CHECK(rhs[8] == parse_polynomial("2*(a4^2 + a3^2)", u));
  CHECK(rhs[9] == parse_polynomial("-2*(a5^2 + a4^2)", u));
}

TEST_CASE("N=3 sign-pattern examples") {
  for (const auto& ex : golden::kExamples3) {
    SystemSpec s = SystemSpec::pattern(ex.signs, 3);
    CAPTURE(ex.signs);
    LaxPair pair = build_lax_tridiag(s);
    CHECK(pair.L == golden::parse_matrix(ex.M, s.phase_universe()));
    CHECK(pair.B == golden::parse_matrix(ex.A, s.phase_universe()));
    CHECK(lax_consistency_check(pair, s).ok());
    auto flow = read_off_flow(pair, s);
    REQUIRE(flow);
    for (int i = 0; i < 3; ++i) CHECK((*flow)[2 + i] == parse_polynomial(ex.bdot[i], s.phase_universe()));
  }
}

TEST_CASE("alternative pair for (-,-)") {
  SystemSpec s = SystemSpec::pattern("--", 3);
  LaxPair alt = build_lax_alternative(s);
  CHECK(alt.L == golden::parse_matrix(golden::kL4ALT, s.phase_universe()));
  CHECK(alt.B == golden::parse_matrix(golden::kB4ALT, s.phase_universe()));
  CHECK(lax_consistency_check(alt, s).ok());
  CHECK_THROWS_AS(build_lax_alternative(SystemSpec::pattern("+-", 3)), UnsupportedError);
}

TEST_CASE("tridiagonal pairs for every pattern") {
  for (int N = 2; N <= 5; ++N) {
    for (bool periodic : {false, true}) {
      if (periodic && N < 3) continue;
      for (const SystemSpec& s : all_patterns(N, periodic)) {
        CAPTURE(s.label());
        CHECK(lax_consistency_check(build_lax_tridiag(s), s).ok());
      }
    }
  }
}

TEST_CASE("so(6,5) periodic M reference") {
  SystemSpec s = SystemSpec::block(5, 3, true);
  LaxPair pair = build_lax_tridiag(s.as_pattern());
  Polynomial ia5 = Polynomial(Coefficient::imaginary_unit()) * s.a(5);
  CHECK(pair.L(0, 4) == ia5);
  CHECK(pair.L(4, 0) == ia5);
  CHECK(pair.B(0, 4) == -ia5);
  CHECK(pair.B(4, 0) == ia5);
  CHECK(pair.L(2, 3) == Polynomial(Coefficient::imaginary_unit()) * s.a(3));
}

TEST_CASE("so(6,5) invariants") {
  SystemSpec s = SystemSpec::sopq(3, 2);
  auto u = s.phase_universe();
  InvariantFamily fam = invariants(s);
  CHECK(fam.H.at(2) == parse_polynomial(golden::kH2, u));
  CHECK(fam.H.at(4) == parse_polynomial(golden::kH4, u));
  CHECK(fam.I.at(3) == parse_polynomial(golden::kI3, u));
  CHECK(fam.H.at(2) == quadratic_hamiltonian(s));
  CHECK(h6_relation_residual(fam).is_zero());

  std::map<GenId, Coefficient> pt;
  for (int i = 1; i <= 4; ++i) pt[gen_a(i)] = Coefficient(1);
  for (int i = 1; i <= 5; ++i) pt[gen_b(i)] = Coefficient();
  // Oracle: the reference H_2 gives 1+1-1+1 = 2; H_4 gives 1-1-1+2 = 1.
  CHECK(evaluate(fam.H.at(2), pt) == Coefficient(2));
  CHECK(evaluate(fam.H.at(4), pt) == Coefficient(1));
}

TEST_CASE("a = 0 invariants are power sums") {
  SystemSpec s = SystemSpec::sopq(2, 2);
  InvariantFamily fam = invariants(s);
  std::map<GenId, Polynomial> zero_a;
  for (int i = 1; i <= s.K(); ++i) zero_a[gen_a(i)] = Polynomial();
  for (int i = 1; i <= 3; ++i) {
    Polynomial expected;
    for (int j = 1; j <= 4; ++j) expected += s.b(j).pow(static_cast<unsigned>(2 * i));
    expected.scale(Coefficient::rational(1, 2 * i));
    CHECK(substitute(fam.H.at(2 * i), zero_a, s.phase_universe()) == expected);
  }
}

TEST_CASE("relation and conservation checks") {
  for (const SystemSpec& s : {SystemSpec::sopq(3, 2), SystemSpec::block(4, 1), SystemSpec::block(3, 2, true),
                              SystemSpec::block(4, 2, true)}) {
    CAPTURE(s.label());
    CheckReport rel = relation_checks(s);
    for (const auto& it : rel.items) {
      CAPTURE(it.identity);
      CAPTURE(it.detail);
      CHECK(it.pass);
    }
    CHECK(conservation_checks(s).ok());
  }
  for (const SystemSpec& s : all_patterns(4, false)) CHECK(conservation_checks(s).ok());
  for (const SystemSpec& s : all_patterns(4, true)) CHECK(conservation_checks(s).ok());
}

TEST_CASE("tr M^j involves only b and a^2") {
  SystemSpec s = SystemSpec::pattern("+-+-", 5);
  for (const Polynomial& t : power_traces(build_lax_tridiag(s).L, 5)) {
    CHECK(t.is_real());
    for (const auto& [m, c] : t.terms()) {
      for (int i = 1; i <= s.K(); ++i) CHECK(m.exponent(gen_a(i)) % 2 == 0);
    }
  }
}
