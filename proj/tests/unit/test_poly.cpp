#include <doctest.h>

#include "helpers.hpp"
#include "rrclosure/error.hpp"

using namespace testing;

namespace {

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg), c(-9, 9);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) m.set(v, e(rng));
    ts.push_back({m, r->field().from_integer(static_cast<long>(c(rng)))});
  }
  return Polynomial(r, ts);
}

}  // namespace

TEST_SUITE("poly-core") {

TEST_CASE("cancellation and squares") {
  auto R = qq();
  CHECK(P(R, "(x+y) + (-y)") == P(R, "x"));
  CHECK(P(R, "(x+y)^2") == P(R, "x^2 + 2*x*y + y^2"));
  CHECK(P(R, "x - x").is_zero());
}

TEST_CASE("leading terms under degrevlex") {
  auto R = qq();
  CHECK(P(R, "x + y^2").leading_monomial() == P(R, "y^2").leading_monomial());
  CHECK(P(R, "x^10 + y^5 + x^8*y").leading_monomial() == P(R, "x^10").leading_monomial());
  auto five = P(R, "5");
  CHECK(five.leading_monomial().is_one());
  CHECK(five.leading_coefficient() == R->field().from_integer(5L));
  CHECK_THROWS_AS(P(R, "0").leading_term(), Error);
}

TEST_CASE("cube of the superficial element") {
  // expand by repeated multiplication and inspect
  auto R = qq();
  Polynomial f = P(R, "y^5 + x^10 + x^8*y");
  Polynomial cube = f * f * f;
  CHECK(cube == f.pow(3));
  Monomial x30(2);
  x30.set(0, 30);
  CHECK(cube.leading_monomial() == x30);
  // every term of the cube has degree at most 30
  for (const auto& t : cube.terms()) CHECK(t.monomial.degree() <= 30);
}

TEST_CASE("other term orders") {
  auto L = make_ring(Field::rationals(), {"x", "y"}, TermOrder::lex());
  CHECK(P(L, "x + y^2").leading_monomial() == P(L, "x").leading_monomial());
  auto G = make_ring(Field::rationals(), {"x", "y"}, TermOrder(OrderKind::DegLex));
  CHECK(P(G, "x*y^2 + x^2*y").leading_monomial() == P(G, "x^2*y").leading_monomial());
  auto D = qq();
  CHECK(P(D, "x*y^2 + x^2*y").leading_monomial() == P(D, "x^2*y").leading_monomial());
}

TEST_CASE("ring axioms on random polynomials") {
  auto R = qq({"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    auto f = random_poly(R, rng, 4, 3), g = random_poly(R, rng, 4, 3), h = random_poly(R, rng, 3, 2);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
    CHECK((f - g) + g == f);
    if (!f.is_zero() && !g.is_zero())
      CHECK((f * g).leading_monomial() == f.leading_monomial() * g.leading_monomial());
  }
}

TEST_CASE("print then parse is the identity") {
  auto R = qq({"x", "y", "z"});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto f = random_poly(R, rng, 5, 4);
    if (i % 3 == 0) f = f.scaled(R->field().from_rational(mpq_class(3, 7)));
    CHECK(P(R, f.to_string()) == f);
  }
  auto F = make_ring(Field::prime(32003), {"x", "y"});
  auto f = P(F, "32002*x + 5*y^2");
  CHECK(f == P(F, "-x + 5*y^2"));
  CHECK(P(F, f.to_string()) == f);
}

TEST_CASE("prime fields") {
  auto K = Field::prime(7);
  CHECK(K.mul(K.from_integer(3L), K.inv(K.from_integer(3L))) == K.one());
  CHECK(K.from_integer(-1L) == K.from_integer(6L));
  CHECK_THROWS_AS(Field::prime(8), Error);
  CHECK(Field::parse("Fp:32003") == Field::prime(32003));
  CHECK(Field::parse("QQ") == Field::rationals());
  CHECK_THROWS_AS(Field::parse("RR"), Error);
}

TEST_CASE("ring mismatch and duplicate variables") {
  auto A = qq(), B = qq({"u", "v"});
  CHECK_THROWS_AS(P(A, "x") + P(B, "u"), Error);
  CHECK_THROWS_AS(make_ring(Field::rationals(), {"x", "x"}), Error);
}

TEST_CASE("exponent overflow is detected") {
  auto R = qq();
  CHECK_THROWS_AS(P(R, "x^1000000").pow(100000), Error);
}

}  // TEST_SUITE
