#include "rrclosure/hilbert.hpp"

#include <algorithm>
#include <functional>

#include "rrclosure/bounds.hpp"
#include "rrclosure/error.hpp"

namespace rrc {

namespace {

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// binom(top, k) as a polynomial in top, so negative arguments are allowed.
mpz_class binomial_poly(std::int64_t top, std::int64_t k) {
  if (k < 0) return 0;
  mpz_class num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= static_cast<long>(top - i);
    den *= static_cast<long>(i + 1);
  }
  return num / den;
}

std::int64_t to_i64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::Overflow, "integer does not fit in 64 bits");
  return v.get_si();
}

// Coefficient of X^N in (1 − X)^order · Σ h(n) X^n.
std::int64_t difference_at(const std::vector<std::uint64_t>& h, int order, std::size_t N) {
  mpz_class acc = 0;
  for (int i = 0; i <= order && static_cast<std::size_t>(i) <= N; ++i) {
    mpz_class term = binomial(order, i) * mpz_class(static_cast<unsigned long>(h[N - i]));
    if (i % 2) acc -= term;
    else acc += term;
  }
  return to_i64(acc);
}

using Sampler = std::function<std::uint64_t(std::int64_t)>;

void finish(PoincareData& pd, const std::vector<std::int64_t>& coeffs) {
  std::size_t s = coeffs.size();
  while (s > 0 && coeffs[s - 1] == 0) --s;
  if (s == 0) throw Error(ErrorCode::Internal, "Poincare numerator vanished");
  pd.numerator.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(s));
  pd.e0 = 0;
  for (auto a : pd.numerator) pd.e0 += a;
  pd.pn = static_cast<std::int64_t>(s - 1) - pd.d_effective;
}

void sample_up_to(const Sampler& sample, PoincareData& pd, std::vector<std::int64_t>& coeffs,
                  std::size_t last) {
  const int order = pd.d_effective + 1;
  while (pd.samples.size() <= last) {
    pd.samples.push_back(sample(static_cast<std::int64_t>(pd.samples.size())));
    coeffs.push_back(difference_at(pd.samples, order, pd.samples.size() - 1));
  }
}

PoincareData compute(const Sampler& sample, int d_ring, int d_eff, const PoincareOptions& opts) {
  PoincareData pd;
  pd.d_effective = d_eff;
  pd.mode = opts.mode;
  std::vector<std::int64_t> coeffs;
  const int window = opts.window > 0 ? opts.window : d_ring + 3;

  // heuristic pass: also the e0 estimate for the certified bound
  int zeros = 0;
  for (std::size_t N = 0;; ++N) {
    if (N > opts.bound_cap)
      throw Error(ErrorCode::BoundTooLarge,
                  "Poincare numerator did not stabilize within " + std::to_string(opts.bound_cap) +
                      " samples");
    sample_up_to(sample, pd, coeffs, N);
    zeros = coeffs[N] == 0 ? zeros + 1 : 0;
    if (zeros >= window && N > static_cast<std::size_t>(d_eff)) break;
  }
  pd.window_used = window;
  finish(pd, coeffs);
  if (opts.mode == Mode::Heuristic) return pd;

  for (;;) {
    mpz_class last = f_bound(pd.e0, d_ring) + 1 + d_ring;
    if (last > opts.bound_cap)
      throw Error(ErrorCode::BoundTooLarge,
                  "certified sampling needs h up to n = " + last.get_str() + ", above the cap " +
                      std::to_string(opts.bound_cap));
    std::int64_t e0_before = pd.e0;
    sample_up_to(sample, pd, coeffs, last.get_ui());
    pd.window_used = static_cast<int>(last.get_ui());
    finish(pd, coeffs);
    if (pd.e0 == e0_before) break;
  }
  return pd;
}

void check_element(const Ideal& I, const Polynomial& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "quotient by the zero element");
  if (!I.contains(x))
    throw Error(ErrorCode::ElementNotInIdeal, x.to_string() + " is not in the ideal");
}

std::uint64_t quotient_sample(IdealPowers& powers, const Polynomial& x, std::int64_t n) {
  const Ideal& A = powers.power(n + 1);
  if (A.is_monomial() && x.is_monomial()) {
    auto gens = monomial_ideal::sum(A.leading_ideal(), {x.leading_monomial()});
    auto c = monomial_ideal::colength(gens, A.ring()->nvars());
    if (!c) throw Error(ErrorCode::NotMPrimary, "quotient colength is infinite");
    return *c;
  }
  return sum_colength(A, x, powers.power(n));
}

}  // namespace

std::string_view mode_name(Mode mode) {
  return mode == Mode::Heuristic ? "heuristic" : "certified";
}

IdealPowers::IdealPowers(Ideal base) : base_(std::move(base)) {
  powers_.push_back(Ideal::unit(base_.ring()));
  powers_.push_back(base_);
}

const Ideal& IdealPowers::power(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative ideal power");
  std::lock_guard lock(mu_);
  while (static_cast<std::int64_t>(powers_.size()) <= n)
    powers_.push_back(ideal_product(powers_.back(), base_));
  return powers_[static_cast<std::size_t>(n)];
}

std::uint64_t hilbert_samuel(IdealPowers& powers, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative Hilbert-Samuel argument");
  powers.base().require_m_primary("hilbert_samuel");
  Colength c = powers.power(n + 1).colength();
  if (!c) throw Error(ErrorCode::NotMPrimary, "power has infinite colength");
  return *c;
}

std::uint64_t hilbert_samuel_quotient(IdealPowers& powers, const Polynomial& x, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative Hilbert-Samuel argument");
  powers.base().require_m_primary("hilbert_samuel_quotient");
  check_element(powers.base(), x);
  return quotient_sample(powers, x, n);
}

PoincareData poincare(IdealPowers& powers, const PoincareOptions& opts) {
  const Ideal& I = powers.base();
  I.require_m_primary("poincare");
  const int d = static_cast<int>(I.ring()->nvars());
  return compute([&](std::int64_t n) { return *powers.power(n + 1).colength(); }, d, d, opts);
}

PoincareData poincare_quotient(IdealPowers& powers, const Polynomial& x,
                               const PoincareOptions& opts) {
  const Ideal& I = powers.base();
  I.require_m_primary("poincare_quotient");
  check_element(I, x);
  const int d = static_cast<int>(I.ring()->nvars());
  return compute([&](std::int64_t n) { return quotient_sample(powers, x, n); }, d, d - 1, opts);
}

std::vector<std::int64_t> hilbert_coefficients(const PoincareData& data) {
  std::vector<std::int64_t> e;
  for (int j = 0; j <= data.d_effective; ++j) {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < data.numerator.size(); ++i)
      acc += binomial(static_cast<std::int64_t>(i), j) * mpz_class(static_cast<long>(data.numerator[i]));
    e.push_back(to_i64(acc));
  }
  return e;
}

std::int64_t hilbert_polynomial_value(std::span<const std::int64_t> coefficients, int d_effective,
                                      std::int64_t n) {
  mpz_class acc = 0;
  for (int j = 0; j <= d_effective && static_cast<std::size_t>(j) < coefficients.size(); ++j) {
    mpz_class term = mpz_class(static_cast<long>(coefficients[j])) *
                     binomial_poly(n + d_effective - j, d_effective - j);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return to_i64(acc);
}

std::vector<std::int64_t> reconstruct_samples(const PoincareData& data, std::size_t count) {
  std::vector<std::int64_t> h(count, 0);
  for (std::size_t i = 0; i < count && i < data.numerator.size(); ++i) h[i] = data.numerator[i];
  for (int pass = 0; pass <= data.d_effective; ++pass)
    for (std::size_t i = 1; i < count; ++i) h[i] += h[i - 1];
  return h;
}

std::int64_t postulation_with_reduction(IdealPowers& powers, std::span<const Polynomial> xs,
                                        const PoincareOptions& opts) {
  std::int64_t pn = poincare(powers, opts).pn;
  for (const auto& x : xs) pn = std::max(pn, poincare_quotient(powers, x, opts).pn);
  return pn;
}

}  // namespace rrc
