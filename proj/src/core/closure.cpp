#include "rrclosure/closure.hpp"

#include <algorithm>
#include <chrono>

#include "rrclosure/bounds.hpp"
#include "rrclosure/error.hpp"

namespace rrc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::vector<Polynomial> powers_of(std::span<const Polynomial> xs, std::int64_t k) {
  std::vector<Polynomial> out;
  for (const auto& x : xs) out.push_back(x.pow(k));
  return out;
}

Ideal chain_term_above(IdealPowers& powers, std::span<const Polynomial> xs, std::int64_t k,
                       const Ideal& lower) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "chain index must be at least 1");
  return colon_ideal(powers.power(k + 1), powers_of(xs, k), &lower);
}

void check_series(const PoincareData& pd, const std::string& label, std::vector<Check>& out) {
  auto rebuilt = reconstruct_samples(pd, pd.samples.size());
  bool same = true;
  for (std::size_t n = 0; n < pd.samples.size(); ++n)
    if (rebuilt[n] != static_cast<std::int64_t>(pd.samples[n])) same = false;
  out.push_back({"reconstruction" + label, same,
                 std::to_string(pd.samples.size()) + " samples"});

  auto e = hilbert_coefficients(pd);
  bool agrees = true;
  std::string detail;
  for (std::int64_t n = std::max<std::int64_t>(pd.pn, 0);
       n < static_cast<std::int64_t>(pd.samples.size()); ++n) {
    std::int64_t p = hilbert_polynomial_value(e, pd.d_effective, n);
    if (p != static_cast<std::int64_t>(pd.samples[static_cast<std::size_t>(n)])) {
      agrees = false;
      detail = "h(" + std::to_string(n) + ") != p(" + std::to_string(n) + ")";
      break;
    }
  }
  out.push_back({"hilbert-polynomial" + label, agrees, detail});

  if (pd.pn >= 1) {
    std::int64_t n = pd.pn - 1;
    bool minimal = hilbert_polynomial_value(e, pd.d_effective, n) !=
                   static_cast<std::int64_t>(pd.samples[static_cast<std::size_t>(n)]);
    out.push_back({"postulation-minimal" + label, minimal, ""});
  }
}

std::string failed_names(const std::vector<Check>& checks) {
  std::string s;
  for (const auto& c : checks)
    if (!c.passed) s += (s.empty() ? "" : ", ") + c.name;
  return s;
}

}  // namespace

bool ClosureReport::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Ideal chain_term(IdealPowers& powers, std::span<const Polynomial> xs, std::int64_t k) {
  return chain_term_above(powers, xs, k, powers.base());
}

ClosureReport closure(const Ideal& I, const ClosureOptions& opts) {
  IdealPowers powers(I);
  return closure(powers, opts);
}

ClosureReport closure(IdealPowers& powers, const ClosureOptions& opts) {
  const Ideal& I = powers.base();
  I.require_m_primary("closure");
  const std::size_t d = I.ring()->nvars();
  const int base_window = opts.window > 0 ? opts.window : static_cast<int>(d) + 3;
  const int doublings = opts.mode == Mode::Certified ? 0 : opts.max_window_doublings;
  std::string last_failure;

  for (int attempt = 0; attempt <= doublings; ++attempt) {
    ClosureReport rep;
    rep.input = I;
    rep.mode = opts.mode;
    rep.window_doublings = attempt;
    PoincareOptions po{opts.mode, base_window << attempt, opts.bound_cap};

    auto t = Clock::now();
    rep.poincare = poincare(powers, po);
    rep.timings.push_back({"poincare", seconds_since(t)});

    t = Clock::now();
    try {
      if (opts.reduction)
        rep.certificate = certify_sequence(powers, *opts.reduction, rep.poincare.e0);
      else
        rep.certificate = find_superficial_sequence(
            powers, rep.poincare.e0,
            SuperficialOptions{opts.seed, opts.max_attempts, opts.coefficient_bound,
                               opts.monomial_first});
    } catch (const Error& e) {
      // A wrong heuristic e0 shows up here first.
      bool retry = (e.code() == ErrorCode::NotSuperficial ||
                    e.code() == ErrorCode::GenericityFailure) &&
                   attempt < doublings;
      if (!retry) throw;
      last_failure = e.what();
      continue;
    }
    rep.timings.push_back({"reduction", seconds_since(t)});
    const auto& xs = rep.certificate.elements;

    t = Clock::now();
    rep.pn_reduction = rep.poincare.pn;
    for (const auto& x : xs) {
      rep.quotients.push_back(poincare_quotient(powers, x, po));
      rep.pn_reduction = std::max(rep.pn_reduction, rep.quotients.back().pn);
    }
    rep.timings.push_back({"quotients", seconds_since(t)});

    t = Clock::now();
    rep.k_used = std::max<std::int64_t>(rep.pn_reduction + 1, 1);
    rep.closure = chain_term(powers, xs, rep.k_used);
    Ideal next = chain_term_above(powers, xs, rep.k_used + 1, rep.closure);
    rep.timings.push_back({"chain", seconds_since(t)});

    t = Clock::now();
    rep.checks.push_back({"chain-stable", rep.closure == next,
                          "L_" + std::to_string(rep.k_used) + " = L_" +
                              std::to_string(rep.k_used + 1)});
    rep.checks.push_back({"e0-equals-reduction-colength",
                          rep.poincare.e0 == static_cast<std::int64_t>(rep.certificate.colength_of_j),
                          std::to_string(rep.poincare.e0)});
    check_series(rep.poincare, "", rep.checks);
    auto e = hilbert_coefficients(rep.poincare);
    for (std::size_t i = 0; i < rep.quotients.size(); ++i) {
      const auto& q = rep.quotients[i];
      std::string label = "(x" + std::to_string(i + 1) + ")";
      check_series(q, label, rep.checks);
      auto eq = hilbert_coefficients(q);
      // e_{d-1} may differ by the limit of length((I^{n+1} : x) / I^n).
      bool same = std::equal(eq.begin(), eq.begin() + static_cast<std::ptrdiff_t>(d - 1), e.begin());
      rep.checks.push_back({"quotient-coefficients" + label, same, ""});
    }
    rep.checks.push_back({"extensive", rep.closure.contains(I), ""});
    rep.timings.push_back({"checks", seconds_since(t)});

    if (!rep.all_checks_passed()) {
      last_failure = "failed checks: " + failed_names(rep.checks);
      if (opts.mode == Mode::Certified)
        throw Error(ErrorCode::Internal, "certified run is inconsistent, " + last_failure);
      continue;
    }
    rep.closure_generators = rep.closure.minimal_generators();
    rep.is_closed = rep.closure == I;
    return rep;
  }
  throw Error(ErrorCode::ChainUnstable,
              "closure did not validate after " + std::to_string(doublings) +
                  " window doublings; " + last_failure);
}

ClosureReport closure_power(const Ideal& I, std::int64_t n, const ClosureOptions& opts) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "power must be at least 1");
  return closure(ideal_power(I, n), opts);
}

bool is_ratliff_rush_closed(const Ideal& I, const ClosureOptions& opts) {
  return closure(I, opts).is_closed;
}

ColonPowersResult closure_via_colon_powers(const Ideal& I, const ColonPowersOptions& opts) {
  I.require_m_primary("closure_via_colon_powers");
  const ClosureOptions& o = opts.base;
  IdealPowers powers(I);
  PoincareData pd = poincare(powers, PoincareOptions{o.mode, o.window, o.bound_cap});
  ReductionCertificate cert =
      o.reduction ? certify_sequence(powers, *o.reduction, pd.e0)
                  : find_superficial_sequence(powers, pd.e0,
                                              SuperficialOptions{o.seed, o.max_attempts,
                                                                 o.coefficient_bound,
                                                                 o.monomial_first});
  ColonPowersResult res;
  // colength(J) bounds e0(I) from above and f is increasing in e.
  res.e = static_cast<std::int64_t>(cert.colength_of_j);
  BoundParams params = bound_params(res.e, static_cast<std::int64_t>(I.ring()->nvars()));
  res.f_value = params.f_value;
  res.certified_k = params.colon_powers_k;
  if (opts.k_override) {
    res.k = *opts.k_override;
    if (res.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    res.certified = mpz_class(static_cast<long>(res.k)) >= res.certified_k;
  } else {
    if (res.certified_k > opts.k_cap)
      throw Error(ErrorCode::BoundTooLarge, "certified k = " + res.certified_k.get_str() +
                                                " exceeds the cap " + std::to_string(opts.k_cap));
    res.k = res.certified_k.get_si();
    res.certified = true;
  }
  res.closure = colon_ideal(powers.power(res.k + 1), powers.power(res.k).minimal_generators(), &I);
  return res;
}

}  // namespace rrc
