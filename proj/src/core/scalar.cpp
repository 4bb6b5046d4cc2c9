#include "rrclosure/scalar.hpp"

#include <charconv>

#include "rrclosure/error.hpp"

namespace rrc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidArgument,
                "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return Field(FieldKind::Prime, p);
}

Field Field::parse(std::string_view descriptor) {
  if (descriptor == "QQ") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (descriptor.substr(0, prefix.size()) == prefix) {
    auto digits = descriptor.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
      return prime(p);
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown field '" + std::string(descriptor) + "' (expected QQ or Fp:<prime>)");
}

std::string Field::descriptor() const {
  return kind_ == FieldKind::Rational ? std::string("QQ") : "Fp:" + std::to_string(p_);
}

Scalar Field::reduce(mpz_class v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p_));
  return Scalar(mpq_class(r));
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(v));
  return reduce(v);
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (kind_ == FieldKind::Rational) return Scalar(v);
  Scalar den = reduce(v.get_den());
  if (den.is_zero())
    throw Error(ErrorCode::InvalidArgument,
                "denominator of " + v.get_str() + " vanishes in " + descriptor());
  return mul(reduce(v.get_num()), inv(den));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(a.value() + b.value()));
  return reduce(a.value().get_num() + b.value().get_num());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(a.value() - b.value()));
  return reduce(a.value().get_num() - b.value().get_num());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(a.value() * b.value()));
  return reduce(a.value().get_num() * b.value().get_num());
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(-a.value()));
  return reduce(-a.value().get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(1 / a.value()));
  mpz_class r;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_invert(r.get_mpz_t(), a.value().get_num_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(r));
}

Scalar Field::pow(const Scalar& a, unsigned long e) const {
  Scalar result = one();
  Scalar base = a;
  while (e > 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace rrc
