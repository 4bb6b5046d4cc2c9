#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace rrc {

/// Upper bound on the regularity of the associated graded ring:
/// e − 1 for d = 1, else e^{2(d−1)!−1}·(e−1)^{(d−1)!}.
mpz_class f_bound(std::int64_t e, std::int64_t d);

struct BoundParams {
  std::int64_t e = 0;
  std::int64_t d = 0;
  mpz_class f_value;
  /// (d + 1)·(f_value + 2): from here on (I^{k+1} : I^k) is the closure.
  mpz_class colon_powers_k;
};

BoundParams bound_params(std::int64_t e, std::int64_t d);

}  // namespace rrc
