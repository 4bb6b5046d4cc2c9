// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   rrc_acceptance [seed]

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rrclosure/closure.hpp"
#include "rrclosure/error.hpp"
#include "rrclosure/problem.hpp"

using namespace rrc;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Run {
  std::string label;
  ClosureReport report;
};

// Every closure computed below, re-verified by criterion 6.
std::deque<Run> g_runs;

const ClosureReport& keep(std::string label, ClosureReport r) {
  g_runs.push_back({std::move(label), std::move(r)});
  return g_runs.back().report;
}

RingPtr qq() { return make_ring(Field::rationals(), {"x", "y"}); }

Ideal ideal(const RingPtr& r, const std::string& gens) {
  return Ideal(r, parse_polynomial_list(r, gens));
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

mpz_class choose(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Length of R/J at the origin: colength(J + m^M) at the first M where it stops growing.
std::uint64_t local_length(const Ideal& J) {
  const Ideal m = Ideal::maximal(J.ring());
  Ideal mM = m;
  std::uint64_t prev = *ideal_sum(J, mM).colength();
  for (int M = 2; M < 2000; ++M) {
    mM = ideal_product(mM, m);
    std::uint64_t c = *ideal_sum(J, mM).colength();
    if (c == prev) return c;
    prev = c;
  }
  throw Error(ErrorCode::Internal, "local length did not stabilize");
}

// ---------------------------------------------------------------------------

Outcome nonclosed_pipeline() {
  Outcome o;
  auto R = qq();
  auto I = ideal(R, "x^10, y^5, x*y^4, x^8*y");
  ClosureOptions opts;
  opts.reduction = std::vector<Polynomial>{parse_polynomial(R, "y^5 + x^10 + x^8*y"),
                                           parse_polynomial(R, "x*y^4")};
  const auto& r = keep("(x^10, y^5, x*y^4, x^8*y)", closure(I, opts));
  o.expect(r.poincare.numerator == std::vector<std::int64_t>{35, 4, 4, 4, -2},
           "numerator " + join(r.poincare.numerator));
  o.expect(r.poincare.e0 == 45, "e0 " + std::to_string(r.poincare.e0));
  o.expect(r.poincare.pn == 2, "pn(I) " + std::to_string(r.poincare.pn));
  o.expect(r.quotients.size() == 2, "quotient count");
  if (r.quotients.size() == 2) {
    o.expect(r.quotients[0].numerator == std::vector<std::int64_t>{35, 6, 4},
             "I/(x1) numerator " + join(r.quotients[0].numerator));
    o.expect(r.quotients[1].numerator == std::vector<std::int64_t>{35, 6, 2, 2},
             "I/(x2) numerator " + join(r.quotients[1].numerator));
  }
  o.expect(r.pn_reduction == 2, "pn(I; x1, x2) " + std::to_string(r.pn_reduction));
  o.expect(r.closure == ideal(R, "x^10, y^5, x*y^4, x^7*y^2, x^6*y^3, x^8*y"), "closure differs");
  o.summary = "numerator " + join(r.poincare.numerator) + ", k = " + std::to_string(r.k_used) +
              ", " + std::to_string(r.closure_generators.size()) + " closure generators";
  return o;
}

Outcome closed_with_open_square() {
  Outcome o;
  auto R = qq();
  auto I = ideal(R,
                 "y^22, x^4*y^18, x^7*y^15, x^8*y^14, x^11*y^11, x^14*y^8, x^15*y^7, x^18*y^4, x^22");
  const auto& r = keep("nine-generator ideal", closure(I));
  o.expect(r.is_closed, "I is not reported closed");
  const auto& r2 = keep("square of the nine-generator ideal", closure_power(I, 2));
  auto expected = ideal_sum(ideal_power(I, 2), ideal(R, "x^24*y^20, x^20*y^24"));
  o.expect(r2.closure == expected, "closure of I^2 differs");
  o.summary = "e0 = " + std::to_string(r.poincare.e0) + ", closure of I^2 adds " +
              std::to_string(*r2.input.colength() - *r2.closure.colength()) + " monomials";
  return o;
}

Outcome closed_ideal() {
  Outcome o;
  auto R = qq();
  auto I = ideal(R, "x^8, x^3*y^2, x^2*y^4, y^8");
  const auto& r = keep("(x^8, x^3*y^2, x^2*y^4, y^8)", closure(I));
  o.expect(r.is_closed, "I is not reported closed");
  o.expect(is_ratliff_rush_closed(I), "is_ratliff_rush_closed is false");
  o.summary = "e0 = " + std::to_string(r.poincare.e0) + ", closed";
  return o;
}

// ---------------------------------------------------------------------------

Ideal monomial_ideal_of(const RingPtr& R, const std::vector<std::pair<int, int>>& exps) {
  monomial_ideal::Gens gens;
  for (auto [a, b] : exps) {
    Monomial m(2);
    m.set(0, a);
    m.set(1, b);
    gens.push_back(m);
  }
  return Ideal::from_monomials(R, gens);
}

Outcome oracle_equivalence(std::mt19937_64& rng) {
  Outcome o;
  auto R = qq();
  int found = 0, tries = 0;
  std::set<std::string> distinct;
  while (found < 20 && tries < 5000) {
    ++tries;
    std::uniform_int_distribution<int> side(1, 4), extra(0, 2);
    int a = side(rng), b = side(rng);
    std::vector<std::pair<int, int>> exps{{a, 0}, {0, b}};
    for (int i = extra(rng); i > 0; --i)
      exps.push_back({std::uniform_int_distribution<int>(0, a)(rng),
                      std::uniform_int_distribution<int>(0, b)(rng)});
    exps.erase(std::remove(exps.begin(), exps.end(), std::pair<int, int>{0, 0}), exps.end());
    Ideal I = monomial_ideal_of(R, exps);
    if (I.is_unit()) continue;
    IdealPowers powers(I);
    std::int64_t e0 = poincare(powers).e0;
    if (e0 > 4) continue;
    ++found;
    std::ostringstream key;
    for (const auto& g : I.basis().elements()) key << g.to_string() << ';';
    distinct.insert(key.str());

    const auto& r = keep("random monomial " + key.str(), closure(powers));
    auto c = closure_via_colon_powers(I);
    std::int64_t k = 3 * (e0 * (e0 - 1) + 2);
    o.expect(c.k == k && c.certified,
             key.str() + " colon powers used k = " + std::to_string(c.k) + ", expected " +
                 std::to_string(k));
    o.expect(c.closure == r.closure, key.str() + " closure differs from (I^{k+1} : I^k)");
  }
  o.expect(found == 20, "only " + std::to_string(found) + " ideals with e0 <= 4 drawn");
  o.summary = std::to_string(found) + " ideals (" + std::to_string(distinct.size()) + " distinct)";
  return o;
}

// ---------------------------------------------------------------------------

// x^i*y^j, after the substitution x -> x + c*y when c != 0.
std::string monomial_text(int i, int j, int c = 0) {
  std::string s;
  if (i) {
    s = c ? "(x " + std::string(c < 0 ? "- " : "+ ") + std::to_string(std::abs(c)) + "*y)" : "x";
    s += "^" + std::to_string(i);
  }
  if (j) s += (s.empty() ? "" : "*") + std::string("y^") + std::to_string(j);
  return s.empty() ? "1" : s;
}

// m-primary ideal in x, y with e0 <= 20. Family 0 takes monomials in a box,
// family 1 pure powers of degree a plus some degree-a mixed monomials, family 2
// adds higher-order tails to the generators. A linear change of coordinates
// is applied when `shear` is set. With `open` only ideals that are not
// Ratliff-Rush closed are returned.
Ideal random_instance(std::mt19937_64& rng, int family, bool shear, bool open = false) {
  auto R = qq();
  std::uniform_int_distribution<int> coef(-9, 9);
  auto nonzero = [&] {
    int c = coef(rng);
    return c ? c : 1;
  };
  for (;;) {
    const int c = shear ? nonzero() : 0;
    std::vector<std::string> gens;
    if (family == 1) {
      int a = std::uniform_int_distribution<int>(2, 4)(rng);
      gens = {monomial_text(a, 0, c), monomial_text(0, a, c)};
      for (int i = 1; i < a; ++i)
        if (rng() & 1) gens.push_back(monomial_text(i, a - i, c));
    } else {
      std::uniform_int_distribution<int> sa(2, 5), sb(2, 4), extra(0, 3);
      int a = sa(rng), b = sb(rng);
      if (rng() & 1) std::swap(a, b);
      auto tail = [&](int deg) {
        int t = deg + std::uniform_int_distribution<int>(1, 3)(rng);
        int i = std::uniform_int_distribution<int>(0, t)(rng);
        int k = nonzero();
        return std::string(k < 0 ? " - " : " + ") + std::to_string(std::abs(k)) + "*" +
               monomial_text(i, t - i, c);
      };
      gens = {monomial_text(a, 0, c), monomial_text(0, b, c)};
      if (family == 2) {
        gens[0] += tail(a);
        gens[1] += tail(b);
      }
      for (int n = extra(rng); n > 0; --n) {
        int i = std::uniform_int_distribution<int>(0, a)(rng);
        int j = std::uniform_int_distribution<int>(0, b)(rng);
        if (i + j == 0) continue;
        std::string g = monomial_text(i, j, c);
        if (family == 2 && (rng() & 1)) g += tail(i + j);
        gens.push_back(g);
      }
    }
    std::string text;
    for (const auto& g : gens) text += (text.empty() ? "" : ", ") + g;
    Ideal I = ideal(R, text);
    if (I.is_unit() || !I.is_m_primary()) continue;
    IdealPowers p(I);
    if (poincare(p).e0 > 20) continue;
    if (open && closure(p).is_closed) continue;
    return I;
  }
}

Outcome properties(std::mt19937_64& rng) {
  Outcome o;
  const int instances = 50;
  int monotone = 0, stable = 0, superficial = 0, extensive = 0, idempotent = 0, coefficients = 0,
      independent = 0, non_monomial = 0, not_closed = 0;
  std::int64_t max_e0 = 0;
  for (int t = 0; t < instances; ++t) {
    Ideal I = t % 4 == 3 ? random_instance(rng, (t / 4) % 2, t % 8 == 7, true)
                         : random_instance(rng, t % 3, t % 2 == 1);
    std::ostringstream name;
    name << "instance " << t << " (";
    for (std::size_t i = 0; i < I.generators().size(); ++i)
      name << (i ? ", " : "") << I.generators()[i].to_string();
    name << ")";
    const std::string tag = name.str();
    auto t0 = std::chrono::steady_clock::now();
    try {
      IdealPowers powers(I);
      ClosureOptions opts;
      opts.seed = rng();
      opts.monomial_first = false;
      const auto& r = keep(tag, closure(powers, opts));
      non_monomial += !I.is_monomial();
      not_closed += !r.is_closed;
      max_e0 = std::max(max_e0, r.poincare.e0);
      const auto& xs = r.certificate.elements;
      const std::int64_t pn = r.pn_reduction;
      const std::int64_t k0 = std::max<std::int64_t>(pn + 1, 1);

      bool ok = true;
      Ideal prev = chain_term(powers, xs, 1);
      std::vector<Ideal> chain{Ideal(), prev};
      for (std::int64_t k = 2; k <= pn + 5; ++k) {
        Ideal next = chain_term(powers, xs, k);
        ok = ok && next.contains(prev);
        chain.push_back(next);
        prev = next;
      }
      monotone += ok;
      o.expect(ok, tag + ": chain not monotone");

      ok = true;
      for (std::int64_t k = k0; k <= pn + 4; ++k)
        ok = ok && chain[static_cast<std::size_t>(k)] == chain[static_cast<std::size_t>(k + 1)];
      stable += ok;
      o.expect(ok, tag + ": chain not stable past pn");

      // I^k ⊆ (I^{k+1} : x) and length R/(A : x) = length R/A - length R/(A + (x))
      ok = true;
      for (const auto& x : xs)
        for (std::int64_t k = k0; k <= pn + 4; ++k) {
          const Ideal& A = powers.power(k + 1);
          std::uint64_t with_x = *ideal_sum(A, Ideal(I.ring(), {x})).colength();
          ok = ok && *A.colength() - with_x == *powers.power(k).colength();
        }
      superficial += ok;
      o.expect(ok, tag + ": (I^{k+1} : x_i) != I^k");

      ok = r.closure.contains(I);
      extensive += ok;
      o.expect(ok, tag + ": closure does not contain I");

      IdealPowers closed(r.closure);
      ClosureOptions again = opts;
      auto r2 = closure(closed, again);
      ok = r2.closure == r.closure && r2.is_closed;
      idempotent += ok;
      o.expect(ok, tag + ": closure not idempotent");
      keep(tag + " closure", std::move(r2));

      ok = hilbert_coefficients(poincare(closed)) == hilbert_coefficients(r.poincare);
      coefficients += ok;
      o.expect(ok, tag + ": Hilbert coefficients differ");

      ClosureOptions other = opts;
      other.seed = opts.seed ^ 0x9e3779b97f4a7c15ULL;
      const auto& r3 = keep(tag + " second seed", closure(I, other));
      ok = r3.closure == r.closure;
      independent += ok;
      o.expect(ok, tag + ": closure depends on the seed");
    } catch (const Error& e) {
      o.failures.push_back(tag + ": " + e.what());
    }
    if (std::getenv("RRC_ACCEPTANCE_VERBOSE"))
      std::fprintf(stderr, "  %s  %.2f s\n", tag.c_str(),
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  std::ostringstream s;
  s << instances << " instances (" << non_monomial << " non-monomial, " << not_closed
    << " not closed, e0 <= " << max_e0 << "): monotone " << monotone << ", stable " << stable
    << ", superficial " << superficial << ", extensive " << extensive << ", idempotent "
    << idempotent << ", e_j " << coefficients << ", seed-independent " << independent;
  o.summary = s.str();
  return o;
}

// ---------------------------------------------------------------------------

Outcome certificates() {
  Outcome o;
  std::size_t sampled = 0;
  for (const auto& [label, r] : g_runs) {
    const auto& a = r.poincare.numerator;
    const int d = r.poincare.d_effective;
    mpz_class e0 = 0;
    for (auto v : a) e0 += v;

    o.expect(r.all_checks_passed(), label + ": recorded check failed");
    Ideal J(r.input.ring(), r.certificate.elements);
    o.expect(e0 == static_cast<unsigned long>(local_length(J)),
             label + ": e0 differs from the length of R/J");

    std::vector<mpz_class> e;
    for (int j = 0; j <= d; ++j) {
      mpz_class acc = 0;
      for (std::size_t i = 0; i < a.size(); ++i) acc += choose(static_cast<long>(i), j) * a[i];
      e.push_back(acc);
    }

    // h(n) straight from fresh powers, against prefix sums and p(n)
    const std::int64_t pn = r.poincare.pn;
    const std::int64_t last = std::max<std::int64_t>(pn, 0) + 3;
    std::vector<mpz_class> h(static_cast<std::size_t>(last + 1), 0);
    for (std::size_t i = 0; i < h.size() && i < a.size(); ++i) h[i] = a[i];
    for (int pass = 0; pass <= d; ++pass)
      for (std::size_t i = 1; i < h.size(); ++i) h[i] += h[i - 1];

    Ideal power = r.input;
    for (std::int64_t n = 0; n <= last; ++n) {
      if (n > 0) power = ideal_product(power, r.input);
      mpz_class actual = static_cast<unsigned long>(*power.colength());
      o.expect(actual == h[static_cast<std::size_t>(n)],
               label + ": reconstruction fails at n = " + std::to_string(n));
      if (n >= pn) {
        mpz_class p = 0;
        for (int j = 0; j <= d; ++j) {
          mpz_class term = e[static_cast<std::size_t>(j)] * choose(static_cast<long>(n + d - j), d - j);
          p += (j % 2) ? -term : term;
        }
        o.expect(actual == p, label + ": h(n) != p(n) at n = " + std::to_string(n));
      }
      ++sampled;
    }
  }
  o.summary = std::to_string(g_runs.size()) + " closure runs, " + std::to_string(sampled) +
              " h-values";
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double budget;  // seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
  std::mt19937_64 rng(seed);
  std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));

  const std::vector<Criterion> criteria{
      {1, "pipeline for (x^10, y^5, x*y^4, x^8*y)", 60, nonclosed_pipeline},
      {2, "closed ideal whose square is not closed", 600, closed_with_open_square},
      {3, "(x^8, x^3*y^2, x^2*y^4, y^8) is closed", 60, closed_ideal},
      {4, "closure equals (I^{k+1} : I^k) at the certified k", 0,
       [&] { return oracle_equivalence(rng); }},
      {5, "property suites", 0, [&] { return properties(rng); }},
      {6, "consistency certificates on every closure run", 0, certificates},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget > 0 && secs > c.budget)
      out.failures.push_back("over the " + std::to_string(static_cast<int>(c.budget)) + " s budget");
    bool pass = out.failures.empty();
    failed += !pass;
    std::printf("criterion %d: %s  %s  (%.2f s)%s%s\n", c.number, pass ? "PASS" : "FAIL", c.title,
                secs, out.summary.empty() ? "" : "  ", out.summary.c_str());
    for (std::size_t i = 0; i < out.failures.size() && i < 10; ++i)
      std::printf("    %s\n", out.failures[i].c_str());
    if (out.failures.size() > 10) std::printf("    ... %zu more\n", out.failures.size() - 10);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
