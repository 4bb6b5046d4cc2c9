#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rrc {

/// An exact field element. Over the rationals the value is a canonical
/// fraction; over F_p it is the least nonnegative residue stored as an
/// integer. Arithmetic goes through `Field`, which knows the characteristic.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(long v) : v_(v) {}
  explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& value() const noexcept { return v_; }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string to_string() const { return v_.get_str(); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_{0};
};

enum class FieldKind { Rational, Prime };

/// Coefficient field: QQ or F_p for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rational, 0); }
  /// Throws InvalidArgument unless p is a prime in [2, 2^31).
  static Field prime(std::uint64_t p);
  /// Accepts "QQ" or "Fp:<prime>".
  static Field parse(std::string_view descriptor);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string descriptor() const;

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(1); }
  Scalar from_integer(const mpz_class& v) const;
  Scalar from_integer(long v) const { return from_integer(mpz_class(v)); }
  /// Maps a rational into the field; over F_p the denominator must be a unit.
  Scalar from_rational(const mpq_class& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, unsigned long e) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Scalar reduce(mpz_class v) const;

  FieldKind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace rrc
