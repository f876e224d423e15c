#include "doctest.h"
#include "random_poly.hpp"

#include "sopq/poly/derivation.hpp"
#include "sopq/poly/errors.hpp"
#include "sopq/poly/matrix.hpp"
#include "sopq/poly/numeric.hpp"
#include "sopq/poly/parse.hpp"

using namespace sopq;
using sopq::testing::random_poly;

namespace {

UniverseRef ab() { return Universe::phase(2, 2); }
Polynomial g(const UniverseRef& u, const char* name) { return Polynomial::generator(u, name); }

}  // namespace

TEST_CASE("coefficients") {
  Coefficient i = Coefficient::imaginary_unit();
  CHECK(i * i == Coefficient(-1));
  CHECK(Coefficient::rational(2, 4) == Coefficient::rational(1, 2));
  CHECK(Coefficient::rational(-3, 4).to_string() == "-3/4");
  CHECK(i.to_string() == "i");
  CHECK((-i).to_string() == "-i");
  CHECK(Coefficient(mpq_class(1, 2), mpq_class(-3, 2)).to_string() == "(1/2-3/2*i)");
  CHECK((Coefficient(1, 1) / Coefficient(1, -1)) == i);
  CHECK_THROWS_AS(Coefficient(1) / Coefficient(0), StructuralError);
  CHECK_THROWS_AS(i.to_double(), StructuralError);
}

TEST_CASE("arithmetic examples") {
  auto u = ab();
  Polynomial a1 = g(u, "a1"), b1 = g(u, "b1");
  CHECK((a1 + (-a1)).is_zero());
  CHECK((a1 + b1) * (a1 - b1) == a1 * a1 - b1 * b1);
  Polynomial ia1 = a1;
  ia1.scale(Coefficient::imaginary_unit());
  CHECK(ia1.scale(Coefficient::imaginary_unit()) == -a1);
  CHECK((a1 * a1 - b1 * b1).to_string() == "a1^2 - b1^2");
}

TEST_CASE("universe mismatch is structural") {
  Polynomial x = g(Universe::phase(2, 2), "a1");
  Polynomial y = g(Universe::phase(3, 3), "a1");
  CHECK_THROWS_AS(x + y, StructuralError);
  CHECK_THROWS_AS(x * y, StructuralError);
  CHECK_NOTHROW(x + Polynomial(3));
  CHECK_THROWS_AS(g(Universe::phase(2, 2), "a3"), StructuralError);
}

TEST_CASE("ring axioms on random triples") {
  auto u = Universe::phase(2, 2);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    Polynomial f = random_poly(rng, u), h = random_poly(rng, u), k = random_poly(rng, u);
    REQUIRE(f + h == h + f);
    REQUIRE(f * h == h * f);
    REQUIRE((f + h) + k == f + (h + k));
    REQUIRE((f * h) * k == f * (h * k));
    REQUIRE(f * (h + k) == f * h + f * k);
    REQUIRE((f - f).is_zero());
  }
}

TEST_CASE("derivations") {
  auto u = ab();
  Polynomial b1 = g(u, "b1");
  CHECK(Derivation::partial(u, gen_b(1))(b1 * b1) == b1.pow(1) * Polynomial(2));

  auto c = Universe::canonical(2, 1);
  Polynomial u1 = g(c, "u1");
  Derivation dq1 = Derivation::partial(c, gen_q(1));
  dq1.set_image(gen_u(1), u1);
  Derivation dq2 = Derivation::partial(c, gen_q(2));
  dq2.set_image(gen_u(1), -u1);
  CHECK(dq1(u1) == u1);
  CHECK(dq2(u1) == -u1);

  Derivation partial_only("partial", u);
  partial_only.set_image(gen_a(1), Polynomial(1));
  CHECK_THROWS_AS(partial_only(b1), StructuralError);
}

TEST_CASE("derivation through an exponential generator") {
  // d(a1^2 u1)/dq2 in a universe carrying both a and u generators.
  auto u = Universe::make({gen_a(1), gen_q(1), gen_q(2), gen_u(1)});
  Polynomial a1 = g(u, "a1"), u1 = g(u, "u1");
  Derivation dq2 = Derivation::partial(u, gen_q(2));
  dq2.set_image(gen_u(1), -u1);
  // Hand Leibniz: 2 a1 * d(a1)/dq2 * u1 + a1^2 * (-u1) = -a1^2 u1.
  CHECK(dq2(a1 * a1 * u1) == -(a1 * a1 * u1));
}

TEST_CASE("Leibniz rule on random pairs") {
  auto u = Universe::canonical(3, 2);
  std::mt19937_64 rng(11);
  std::vector<Derivation> ds;
  for (GenId x : u->generators()) ds.push_back(Derivation::partial(u, x));
  ds[0].set_image(gen_u(1), g(u, "u1"));
  ds[1].set_image(gen_u(1), -g(u, "u1")).set_image(gen_u(2), g(u, "u2"));
  for (int t = 0; t < 500; ++t) {
    Polynomial f = random_poly(rng, u), h = random_poly(rng, u);
    const Derivation& d = ds[static_cast<std::size_t>(t) % ds.size()];
    REQUIRE(d(f * h) == d(f) * h + f * d(h));
  }
}

TEST_CASE("evaluation and substitution") {
  auto u = ab();
  Polynomial a1 = g(u, "a1"), b1 = g(u, "b1"), a2 = g(u, "a2");
  CHECK(evaluate(a1 * a1 + b1, {{gen_a(1), Coefficient(2)}, {gen_b(1), Coefficient(1)}}) == Coefficient(5));

  Polynomial ia2 = a2;
  ia2.scale(Coefficient::imaginary_unit());
  Polynomial two_a2sq = a2 * a2 * Polynomial(2);
  CHECK(substitute(two_a2sq, {{gen_a(2), ia2}}, u) == -two_a2sq);

  std::map<GenId, Coefficient> zero;
  for (GenId x : u->generators()) zero[x] = Coefficient();
  CHECK(evaluate(a1 * b1 - a2, zero).is_zero());
}

TEST_CASE("substitution is a ring homomorphism") {
  auto u = Universe::phase(2, 3);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    std::map<GenId, Polynomial> images;
    for (GenId x : u->generators()) images[x] = random_poly(rng, u, 2, 2);
    Polynomial f = random_poly(rng, u), h = random_poly(rng, u);
    REQUIRE(substitute(f * h, images, u) == substitute(f, images, u) * substitute(h, images, u));
    REQUIRE(substitute(f + h, images, u) == substitute(f, images, u) + substitute(h, images, u));
  }
}

TEST_CASE("canonical text round trip") {
  auto u = Universe::canonical(3, 2);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    Polynomial f = random_poly(rng, u);
    f.scale(Coefficient::rational(1, 1 + t % 5));
    REQUIRE(parse_polynomial(f.to_string(), u) == f);
  }
  auto v = ab();
  CHECK(parse_polynomial("(a1 + b1)^2 - 2*a1*b1", v) == g(v, "a1").pow(2) + g(v, "b1").pow(2));
  CHECK(parse_polynomial("3/2*i*a2", v).to_string() == "3/2*i*a2");
  CHECK_THROWS_AS(parse_polynomial("a1 +", v), StructuralError);
  CHECK_THROWS_AS(parse_polynomial("a1 / b1", v), StructuralError);
  CHECK_THROWS_AS(parse_polynomial("q1", v), StructuralError);
}

TEST_CASE("grlex printing order") {
  auto u = ab();
  Polynomial f = parse_polynomial("b2 + a1*b1 + a1^2 + 1 + a2", u);
  CHECK(f.to_string() == "a1^2 + a1*b1 + a2 + b2 + 1");
}

TEST_CASE("exact quotient") {
  auto u = ab();
  Polynomial a1 = g(u, "a1"), b1 = g(u, "b1");
  CHECK(exact_quotient((a1 + b1) * (a1 - b1 * b1), a1 - b1 * b1) == a1 + b1);
  CHECK_THROWS_AS(exact_quotient(a1 * a1 + b1, a1), StructuralError);
}

TEST_CASE("matrices") {
  using CM = Matrix<Coefficient>;
  CM m(3, 3);
  int v[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Coefficient(v[i][j]);
  }
  // 2*(12-1) - 1*(4-0) = 18.
  CHECK(determinant(m) == Coefficient(18));
  CHECK(rank(m) == 3);
  CM sing = m;
  for (std::size_t j = 0; j < 3; ++j) sing(2, j) = m(0, j) + m(1, j);
  CHECK(determinant(sing).is_zero());
  CHECK(rank(sing) == 2);
  CHECK(commutator(m, CM::identity(3)).is_zero());
  CM k = kron(CM::identity(2), m);
  CHECK(k.rows() == 6);
  CHECK(determinant(k) == Coefficient(324));
  CHECK_THROWS_AS(m.trimmed(), StructuralError);
  CHECK(m.padded(4, 4).trimmed() == m);

  auto u = ab();
  Polynomial a1 = g(u, "a1"), b1 = g(u, "b1");
  Matrix<Polynomial> p(2, 2);
  p(0, 0) = b1;
  p(0, 1) = a1;
  p(1, 0) = a1;
  p(1, 1) = b1;
  CHECK(determinant(p) == b1 * b1 - a1 * a1);
  Matrix<Polynomial> z(2, 2);
  z(0, 1) = a1;
  z(1, 0) = b1;
  CHECK(determinant(z) == -(a1 * b1));
}

TEST_CASE("numeric evaluation agrees with exact evaluation") {
  auto u = ab();
  std::vector<GenId> layout(u->generators().begin(), u->generators().end());
  Polynomial f = parse_polynomial("1/2*a1^2*b2 - 3*a2*b1 + 7", u);
  NumericPolynomial nf(f, layout);
  std::vector<double> x{0.5, -2.0, 3.0, 0.25};
  CHECK(nf(x) == doctest::Approx(0.5 * 0.25 * 0.25 + 6.0 * 3.0 + 7.0));
  CHECK_THROWS_AS(NumericPolynomial(parse_polynomial("i*a1", u), layout), StructuralError);
}
