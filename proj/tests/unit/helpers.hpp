#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rrclosure/closure.hpp"
#include "rrclosure/problem.hpp"

namespace testing {

using namespace rrc;

inline RingPtr qq(std::vector<std::string> vars = {"x", "y"}) {
  return make_ring(Field::rationals(), std::move(vars));
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

inline Ideal ideal(const RingPtr& r, const std::string& gens) {
  return Ideal(r, parse_polynomial_list(r, gens));
}

using Exps = std::vector<int>;

// Brute-force monomial ideal arithmetic on plain exponent vectors.
inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool in_monomial_ideal(const std::vector<Exps>& gens, const Exps& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); });
}

inline std::vector<Exps> brute_product(const std::vector<Exps>& a, const std::vector<Exps>& b) {
  std::vector<Exps> out;
  for (const auto& u : a)
    for (const auto& v : b) {
      Exps w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
      out.push_back(w);
    }
  return out;
}

inline std::vector<Exps> brute_power(const std::vector<Exps>& a, int n) {
  std::vector<Exps> out{Exps(a.front().size(), 0)};
  for (int i = 0; i < n; ++i) out = brute_product(out, a);
  return out;
}

// Counts monomials outside the ideal inside the box [0, bound)^2.
inline std::uint64_t brute_colength2(const std::vector<Exps>& gens, int bound) {
  std::uint64_t c = 0;
  for (int i = 0; i < bound; ++i)
    for (int j = 0; j < bound; ++j)
      if (!in_monomial_ideal(gens, {i, j})) ++c;
  return c;
}

inline std::vector<Exps> exps_of(const Ideal& I) {
  std::vector<Exps> out;
  for (const auto& m : I.leading_ideal()) {
    Exps e;
    for (std::size_t i = 0; i < m.size(); ++i) e.push_back(m[i]);
    out.push_back(e);
  }
  return out;
}

inline Ideal from_exps(const RingPtr& r, const std::vector<Exps>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& e : gens) {
    Monomial m(r->nvars());
    for (std::size_t i = 0; i < e.size(); ++i) m.set(i, e[i]);
    ps.emplace_back(r, m, r->field().one());
  }
  return Ideal(r, ps);
}

// Random m-primary monomial ideal in x, y: pure powers x^a, y^b plus a few
// monomials inside the box.
inline std::vector<Exps> random_monomial_gens(std::mt19937_64& rng, int max_a, int extra) {
  std::uniform_int_distribution<int> side(1, max_a);
  int a = side(rng), b = side(rng);
  std::vector<Exps> gens{{a, 0}, {0, b}};
  std::uniform_int_distribution<int> ex(0, extra);
  int count = ex(rng);
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> da(0, a), db(0, b);
    gens.push_back({da(rng), db(rng)});
  }
  gens.erase(std::remove(gens.begin(), gens.end(), Exps{0, 0}), gens.end());
  return gens;
}

}  // namespace testing
