#include "rrclosure/reductions.hpp"

#include <random>

#include "rrclosure/bounds.hpp"
#include "rrclosure/error.hpp"

namespace rrc {

namespace {

// Length of R/(xs) at the origin. Generic combinations usually meet again
// away from the origin, so the global colength can overshoot. colength(J + I^N)
// grows strictly in N until J + I^N = J + I^{N+1}, and then I^N ⊆ J locally
// (Nakayama), so the stable value is the local length. Stops early once the
// value passes `limit`.
Colength local_colength(IdealPowers& powers, const std::vector<Polynomial>& xs,
                        std::uint64_t limit) {
  auto with_power = [&](std::int64_t n) {
    return sum_colength(powers.power(n), xs, powers.power(n - 1));
  };
  std::uint64_t prev = with_power(1);
  for (std::int64_t n = 2;; ++n) {
    if (prev > limit) return prev;
    std::uint64_t cur = with_power(n);
    if (cur == prev) return cur;
    prev = cur;
  }
}

std::vector<Polynomial> random_candidate(const Ideal& I, const std::vector<Polynomial>& gens,
                                         std::mt19937_64& rng, std::int64_t bound) {
  const RingPtr& ring = I.ring();
  const Field& K = ring->field();
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Polynomial x(ring);
    for (const auto& g : gens) {
      Scalar c;
      if (K.kind() == FieldKind::Prime) {
        std::uniform_int_distribution<std::uint64_t> dist(1, K.characteristic() - 1);
        c = K.from_integer(static_cast<long>(dist(rng)));
      } else {
        std::uniform_int_distribution<std::int64_t> dist(1, 2 * bound);
        std::int64_t v = dist(rng);
        c = K.from_integer(static_cast<long>(v <= bound ? v : bound - v));
      }
      x = x + g.scaled(c);
    }
    xs.push_back(std::move(x));
  }
  return xs;
}

}  // namespace

ReductionCertificate certify_sequence(const Ideal& I, std::vector<Polynomial> xs, std::int64_t e0) {
  IdealPowers powers(I);
  return certify_sequence(powers, std::move(xs), e0);
}

ReductionCertificate certify_sequence(IdealPowers& powers, std::vector<Polynomial> xs,
                                      std::int64_t e0) {
  const Ideal& I = powers.base();
  const RingPtr& ring = I.ring();
  if (xs.size() != ring->nvars())
    throw Error(ErrorCode::InvalidArgument,
                "a reduction needs exactly " + std::to_string(ring->nvars()) + " elements, got " +
                    std::to_string(xs.size()));
  for (const auto& x : xs) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "reduction element is zero");
    if (!I.contains(x))
      throw Error(ErrorCode::ElementNotInIdeal, x.to_string() + " is not in the ideal");
  }
  Colength c = local_colength(powers, xs, static_cast<std::uint64_t>(e0));
  if (static_cast<std::int64_t>(*c) != e0)
    throw Error(ErrorCode::NotSuperficial, "colength of the reduction ideal is " +
                                               std::to_string(*c) + " but e0 is " +
                                               std::to_string(e0));
  ReductionCertificate cert;
  cert.elements = std::move(xs);
  cert.colength_of_j = *c;
  cert.e0_of_i = e0;
  cert.attempts = 1;
  cert.source = "user";
  return cert;
}

ReductionCertificate find_superficial_sequence(const Ideal& I, std::int64_t e0,
                                               const SuperficialOptions& opts) {
  IdealPowers powers(I);
  return find_superficial_sequence(powers, e0, opts);
}

ReductionCertificate find_superficial_sequence(IdealPowers& powers, std::int64_t e0,
                                               const SuperficialOptions& opts) {
  const Ideal& I = powers.base();
  I.require_m_primary("find_superficial_sequence");
  const RingPtr& ring = I.ring();
  const std::size_t d = ring->nvars();
  int attempts = 0;

  if (opts.monomial_first && I.is_monomial()) {
    std::vector<Polynomial> pure(d);
    for (const auto& m : I.leading_ideal()) {
      std::size_t nz = 0, idx = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (m[i] != 0) ++nz, idx = i;
      if (nz == 1) pure[idx] = Polynomial(ring, m, ring->field().one());
    }
    ++attempts;
    Colength c = Ideal(ring, pure).colength();
    if (c && static_cast<std::int64_t>(*c) == e0) {
      ReductionCertificate cert{std::move(pure), *c, e0, opts.seed, attempts, "monomial"};
      return cert;
    }
  }

  std::vector<Polynomial> gens = I.minimal_generators();
  std::mt19937_64 rng(opts.seed);
  std::int64_t bound = opts.coefficient_bound;
  for (int a = 0; a < opts.max_attempts; ++a) {
    ++attempts;
    std::vector<Polynomial> xs = random_candidate(I, gens, rng, bound);
    Colength c = local_colength(powers, xs, static_cast<std::uint64_t>(e0));
    if (c && static_cast<std::int64_t>(*c) == e0)
      return ReductionCertificate{std::move(xs), *c, e0, opts.seed, attempts, "random"};
    if (bound < (std::int64_t{1} << 40)) bound *= 2;
  }
  throw Error(ErrorCode::GenericityFailure,
              "no superficial sequence found in " + std::to_string(opts.max_attempts) +
                  " attempts; try another seed or a larger prime field");
}

std::int64_t reduction_number(IdealPowers& powers, const Ideal& J, std::int64_t e0,
                              std::int64_t r_max) {
  const Ideal& I = powers.base();
  const Ideal m = Ideal::maximal(I.ring());
  for (std::int64_t r = 0; r <= r_max; ++r) {
    // I^{r+1} = J I^r at the origin iff I^{r+1} ⊆ J I^r + m I^{r+1} (Nakayama);
    // the right side is m-primary even when J has zeros elsewhere.
    const Ideal& next = powers.power(r + 1);
    Ideal K = ideal_sum(ideal_product(J, powers.power(r)), ideal_product(m, next));
    if (K.colength() == next.colength()) {
      if (mpz_class(static_cast<long>(r)) > f_bound(e0, static_cast<std::int64_t>(I.ring()->nvars())))
        throw Error(ErrorCode::Internal, "reduction number exceeds f(e0, d)");
      return r;
    }
  }
  throw Error(ErrorCode::RMaxExceeded,
              "I^{r+1} != J I^r for every r <= " + std::to_string(r_max));
}

}  // namespace rrc
