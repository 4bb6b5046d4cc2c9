#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rrclosure/hilbert.hpp"
#include "rrclosure/reductions.hpp"

namespace rrc {

struct ClosureOptions {
  Mode mode = Mode::Heuristic;
  std::uint64_t seed = 0;
  /// User-supplied superficial sequence; searched for when absent.
  std::optional<std::vector<Polynomial>> reduction;
  std::uint64_t bound_cap = 400;
  int window = 0;
  int max_window_doublings = 3;
  int max_attempts = 25;
  std::int64_t coefficient_bound = 10;
  bool monomial_first = true;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ClosureReport {
  Ideal input;
  PoincareData poincare;
  std::vector<PoincareData> quotients;  // one per reduction element
  std::int64_t pn_reduction = 0;        // pn(I; x_1..x_d)
  ReductionCertificate certificate;
  std::int64_t k_used = 1;
  Ideal closure;
  std::vector<Polynomial> closure_generators;
  bool is_closed = false;
  Mode mode = Mode::Heuristic;
  int window_doublings = 0;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timings;  // seconds per step

  bool all_checks_passed() const;
};

/// L_k = (I^{k+1} : (x_1^k..x_d^k)), k ≥ 1.
Ideal chain_term(IdealPowers& powers, std::span<const Polynomial> xs, std::int64_t k);

/// Poincare data, reduction, quotient data, then L_k at k = max(pn(I;xs)+1, 1).
/// Heuristic runs must also see L_k = L_{k+1} and every consistency check
/// pass; otherwise the window doubles, and ChainUnstable is raised once the
/// doublings run out.
ClosureReport closure(const Ideal& I, const ClosureOptions& opts = {});
ClosureReport closure(IdealPowers& powers, const ClosureOptions& opts = {});
ClosureReport closure_power(const Ideal& I, std::int64_t n, const ClosureOptions& opts = {});
bool is_ratliff_rush_closed(const Ideal& I, const ClosureOptions& opts = {});

struct ColonPowersOptions {
  ClosureOptions base;
  std::optional<std::int64_t> k_override;
  /// Largest certified k attempted before BoundTooLarge.
  std::int64_t k_cap = 100;
};

struct ColonPowersResult {
  Ideal closure;
  std::int64_t k = 0;
  mpz_class certified_k;  // (d+1)(f(e, d)+2)
  mpz_class f_value;
  std::int64_t e = 0;     // colength of the certified reduction, ≥ e0(I)
  bool certified = false;
};

/// (I^{k+1} : I^k). Without an override k is the certified threshold; an
/// override below it yields an uncertified result.
ColonPowersResult closure_via_colon_powers(const Ideal& I, const ColonPowersOptions& opts = {});

}  // namespace rrc
