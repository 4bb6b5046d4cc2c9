#include "rrclosure/bounds.hpp"

#include "rrclosure/error.hpp"

namespace rrc {

mpz_class f_bound(std::int64_t e, std::int64_t d) {
  if (e < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "f(e, d) needs e >= 1 and d >= 1");
  if (d == 1) return mpz_class(static_cast<long>(e - 1));
  if (d > 12) throw Error(ErrorCode::Overflow, "f(e, d) is astronomically large for d > 12");
  unsigned long fact = 1;
  for (std::int64_t i = 2; i <= d - 1; ++i) fact *= static_cast<unsigned long>(i);
  mpz_class a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(e), 2 * fact - 1);
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(e - 1), fact);
  return a * b;
}

BoundParams bound_params(std::int64_t e, std::int64_t d) {
  BoundParams p;
  p.e = e;
  p.d = d;
  p.f_value = f_bound(e, d);
  p.colon_powers_k = (d + 1) * (p.f_value + 2);
  return p;
}

}  // namespace rrc
