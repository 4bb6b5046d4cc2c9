#include <doctest.h>

#include "helpers.hpp"
#include "rrclosure/error.hpp"
#include "rrclosure/groebner.hpp"

using namespace testing;

TEST_SUITE("ideal-engine") {

TEST_CASE("reduced bases") {
  auto R = qq();
  CHECK(ideal(R, "x, y, x + y") == ideal(R, "x, y"));
  CHECK(ideal(R, "x, y, x + y").basis().elements().size() == 2);
  // one Buchberger step by hand: x^2 + y^2 - y^2 = x^2
  auto B = ideal(R, "x^2 + y^2, y^2").basis();
  REQUIRE(B.elements().size() == 2);
  // ascending leading monomials
  CHECK(B.elements()[0] == P(R, "y^2"));
  CHECK(B.elements()[1] == P(R, "x^2"));
  auto R1 = qq({"x"});
  auto B1 = ideal(R1, "x^2 - x").basis();
  REQUIRE(B1.elements().size() == 1);
  CHECK(B1.elements()[0] == P(R1, "x^2 - x"));
}

TEST_CASE("normal forms") {
  auto R1 = qq({"x"});
  CHECK(ideal(R1, "x^2 - x").basis().normal_form(P(R1, "x^2")) == P(R1, "x"));
  auto R = qq();
  auto I = ideal(R, "x^10, y^5, x*y^4, x^8*y");
  for (const auto& g : I.generators()) CHECK(I.basis().normal_form(g).is_zero());
  CHECK_FALSE(I.basis().normal_form(P(R, "x^7*y^2")).is_zero());
}

TEST_CASE("Buchberger criterion on random ideals") {
  auto R = qq({"x", "y", "z"});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<Term> ts;
      for (int t = 0; t < 3; ++t) {
        Monomial m(3);
        for (int v = 0; v < 3; ++v) m.set(v, e(rng));
        ts.push_back({m, R->field().from_integer(static_cast<long>(c(rng)))});
      }
      Polynomial p(R, ts);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    auto B = groebner_basis(R, gens);
    const auto& els = B.elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
      CHECK(els[i].leading_coefficient() == R->field().one());
      for (std::size_t j = i + 1; j < els.size(); ++j)
        CHECK(B.normal_form(s_polynomial(els[i], els[j])).is_zero());
    }
    for (const auto& g : gens) CHECK(B.normal_form(g).is_zero());
  }
}

TEST_CASE("sums, products, powers") {
  auto R = qq();
  CHECK(ideal_power(ideal(R, "x, y"), 2) == ideal(R, "x^2, x*y, y^2"));
  auto I = ideal(R, "x^10, y^5, x*y^4, x^8*y");
  CHECK(ideal_power(I, 1) == I);
  CHECK(ideal_power(I, 0).is_unit());
  // 35 + (2*35 + 4): partial sums of 35 + 4X + 4X^2 + 4X^3 - 2X^4
  CHECK(ideal_power(I, 2).colength() == 109u);
  CHECK(ideal_sum(ideal(R, "x^2"), ideal(R, "y")) == ideal(R, "x^2, y"));
}

TEST_CASE("power consistency on random ideals") {
  auto R = qq();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    auto gens = random_monomial_gens(rng, 4, 2);
    auto I = from_exps(R, gens);
    // a non-monomial ideal too
    auto J = ideal_sum(I, Ideal(R, {P(R, "x*y + y^2")}));
    for (const auto& K : {I, J})
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 2; ++b)
          CHECK(ideal_power(K, a + b) == ideal_product(ideal_power(K, a), ideal_power(K, b)));
  }
}

TEST_CASE("monomial fast paths agree with Groebner bases") {
  auto R = qq();
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto gens = random_monomial_gens(rng, 5, 3);
    auto I = from_exps(R, gens);
    // Same ideal given by a non-monomial generating set: Buchberger runs.
    std::vector<Polynomial> disguised;
    auto mono = I.generators();
    for (std::size_t i = 0; i < mono.size(); ++i)
      disguised.push_back(i + 1 < mono.size() ? mono[i] + mono[i + 1] : mono[i]);
    auto B = groebner_basis(R, disguised);
    CHECK(B == I.basis());
    auto sq = brute_power(gens, 2);
    CHECK(ideal_power(I, 2) == from_exps(R, sq));
    // colon via the tag variable against the monomial formula
    auto b = std::vector<Polynomial>{P(R, "x^2"), P(R, "x*y")};
    auto mono_colon = colon_ideal(ideal_power(I, 2), b);
    auto elim_colon = colon_ideal(ideal_power(I, 2), b, nullptr, ColonStrategy::Elimination);
    auto kern_colon = colon_ideal(ideal_power(I, 2), b, nullptr, ColonStrategy::Kernel);
    CHECK(mono_colon == elim_colon);
    CHECK(mono_colon == kern_colon);
  }
}

TEST_CASE("colons") {
  auto R = qq();
  CHECK(colon_ideal(ideal(R, "x^2"), ideal(R, "x")) == ideal(R, "x"));
  // brute force over monomials of bounded degree: h*(x^3, y^3) ⊆ m^4 iff deg h >= 1
  auto m4 = ideal_power(Ideal::maximal(R), 4);
  auto q = colon_ideal(m4, ideal(R, "x^3, y^3"));
  std::vector<Exps> oracle;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i + j + 3 >= 4) oracle.push_back({i, j});
  CHECK(q == from_exps(R, oracle));
  CHECK(q == Ideal::maximal(R));
  for (auto s : {ColonStrategy::Kernel, ColonStrategy::Elimination})
    CHECK(colon_ideal(m4, ideal(R, "x^3, y^3"), s) == Ideal::maximal(R));
}

TEST_CASE("colon by powers of a reduction") {
  auto R = qq();
  auto I = ideal(R, "x^10, y^5, x*y^4, x^8*y");
  auto I4 = ideal_power(I, 4);
  std::vector<Polynomial> b{P(R, "(y^5 + x^10 + x^8*y)^3"), P(R, "(x*y^4)^3")};
  auto expected = ideal(R, "x^10, y^5, x*y^4, x^7*y^2, x^6*y^3, x^8*y");
  CHECK(colon_ideal(I4, b) == expected);
  CHECK(colon_ideal(I4, b, &I) == expected);
  CHECK(colon_ideal(I4, b, nullptr, ColonStrategy::Elimination) == expected);
  // wrong lower bound is rejected
  auto bad = ideal(R, "x, y");
  CHECK_THROWS_AS(colon_ideal(I4, b, &bad), Error);
}

TEST_CASE("colon properties on random non-monomial ideals") {
  auto R = qq();
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = random_monomial_gens(rng, 4, 2);
    auto A = ideal_sum(ideal_power(from_exps(R, gens), 2), Ideal(R, {P(R, "x^3 - x*y^2")}));
    std::vector<Polynomial> b{P(R, "x + y"), P(R, "y^2")};
    auto Q = colon_ideal(A, b);
    CHECK(Q.contains(A));
    for (const auto& h : Q.basis().elements())
      for (const auto& g : b) CHECK(A.contains(h * g));
    CHECK(Q == colon_ideal(A, b, nullptr, ColonStrategy::Elimination));
  }
}

TEST_CASE("containment and equality") {
  auto R = qq();
  CHECK(ideal(R, "x, y") == ideal(R, "y, x + y"));
  CHECK(ideal(R, "x").contains(ideal(R, "x^2, x*y")));
  CHECK_FALSE(ideal(R, "x^2, x*y") == ideal(R, "x"));
  auto I = ideal(R, "x^10, y^5, x*y^4, x^8*y");
  auto C = ideal(R, "x^10, y^5, x*y^4, x^7*y^2, x^6*y^3, x^8*y");
  CHECK(C.contains(I));
  CHECK_FALSE(I.contains(C));
}

TEST_CASE("colength") {
  auto R = qq();
  CHECK(ideal(R, "x, y").colength() == 1u);
  CHECK(ideal(R, "x^10, y^5, x*y^4, x^8*y").colength() == 35u);
  CHECK(ideal(R, "y^5 + x^10 + x^8*y, x*y^4").colength() == 45u);
  CHECK_FALSE(ideal(R, "x^2, x*y").colength().has_value());
}

TEST_CASE("colength agrees with brute force") {
  auto R = qq();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    auto gens = random_monomial_gens(rng, 7, 4);
    CHECK(from_exps(R, gens).colength() == brute_colength2(gens, 8));
    auto sq = brute_power(gens, 2);
    CHECK(ideal_power(from_exps(R, gens), 2).colength() == brute_colength2(sq, 15));
  }
}

TEST_CASE("m-primary test") {
  auto R = qq();
  CHECK(ideal(R, "x^8, x^3*y^2, x^2*y^4, y^8").is_m_primary());
  CHECK(ideal(R, "x, y").is_m_primary());
  auto R1 = qq({"x"});
  auto I = ideal(R1, "x^2 - x");
  CHECK(I.colength() == 2u);
  CHECK_FALSE(I.is_m_primary());
  CHECK_FALSE(I.m_primary_witness().empty());
  CHECK_FALSE(ideal(R, "x^2, x*y").is_m_primary());
  CHECK_FALSE(ideal(R, "1").is_m_primary());
  CHECK_THROWS_AS(ideal(R, "x^2, x*y").require_m_primary("test"), Error);
  // colength 2 at the origin plus one point elsewhere
  CHECK_FALSE(ideal(R, "x^2 - x, y").is_m_primary());
}

TEST_CASE("minimal generators") {
  auto R = qq();
  auto g = ideal(R, "x, y, x + y, x^2").minimal_generators();
  CHECK(g.size() == 2);
  CHECK(Ideal(R, g) == ideal(R, "x, y"));
  CHECK(ideal(R, "x^2, x*y, y^2, x^3").minimal_generators().size() == 3);
  auto C = ideal(R, "x^10, y^5, x*y^4, x^7*y^2, x^6*y^3, x^8*y");
  CHECK(C.minimal_generators().size() == 6);
  auto N = ideal(R, "x^2 + y^3, x*y, y^4, x^3");
  auto ng = N.minimal_generators();
  CHECK(ng.size() == 2);
  CHECK(Ideal(R, ng) == N);
}

TEST_CASE("intersection") {
  auto R = qq();
  CHECK(ideal_intersection(ideal(R, "x"), ideal(R, "y")) == ideal(R, "x*y"));
  CHECK(ideal_intersection(ideal(R, "x^2, y"), ideal(R, "x, y^2")) == ideal(R, "x^2, x*y, y^2"));
}

TEST_CASE("quotient colength by rank") {
  auto R = qq();
  auto I = ideal(R, "x^10, y^5, x*y^4, x^8*y");
  auto I2 = ideal_power(I, 2);
  auto x = P(R, "y^5 + x^10 + x^8*y");
  CHECK(sum_colength(I2, x, I) == ideal_sum(I2, Ideal(R, {x})).colength());
  std::vector<Polynomial> xs{x, P(R, "x*y^4 - 3*x^10")};
  CHECK(sum_colength(I2, xs, I) == ideal_sum(I2, Ideal(R, xs)).colength());
  CHECK(sum_colength(I2, xs, Ideal::unit(R)) == I2.colength());
}

}  // TEST_SUITE
