#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rrclosure/hilbert.hpp"

namespace rrc {

/// d elements of I whose ideal J has length e0(I) at the origin. That equality
/// is the certificate: J is then a minimal reduction and (x_1..x_d) is
/// superficial.
struct ReductionCertificate {
  std::vector<Polynomial> elements;
  std::uint64_t colength_of_j = 0;
  std::int64_t e0_of_i = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::string source;  // "user", "monomial" or "random"
};

struct SuperficialOptions {
  std::uint64_t seed = 0;
  int max_attempts = 25;
  /// Coefficients are drawn from {-B..B} \ {0} over QQ; B doubles per retry.
  std::int64_t coefficient_bound = 10;
  /// Try the pure-power generators of a monomial ideal before random ones.
  bool monomial_first = true;
};

/// Throws InvalidArgument unless |xs| = d, ElementNotInIdeal, or
/// NotSuperficial when the local length of R/(xs) differs from e0.
ReductionCertificate certify_sequence(const Ideal& I, std::vector<Polynomial> xs, std::int64_t e0);
ReductionCertificate certify_sequence(IdealPowers& powers, std::vector<Polynomial> xs,
                                      std::int64_t e0);

/// Random combinations of minimal generators, retried up to max_attempts
/// times (GenericityFailure afterwards). Deterministic in the seed.
ReductionCertificate find_superficial_sequence(const Ideal& I, std::int64_t e0,
                                               const SuperficialOptions& opts = {});
ReductionCertificate find_superficial_sequence(IdealPowers& powers, std::int64_t e0,
                                               const SuperficialOptions& opts = {});

/// Least r ≤ r_max with I^{r+1} = J·I^r at the origin, else RMaxExceeded.
/// The result is checked against r ≤ f(e0, d).
std::int64_t reduction_number(IdealPowers& powers, const Ideal& J, std::int64_t e0,
                              std::int64_t r_max);

}  // namespace rrc
