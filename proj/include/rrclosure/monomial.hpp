#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rrc {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector in a fixed number of variables. The total degree is cached.
/// Exponent arithmetic is overflow-checked and throws ErrorCode::Overflow.
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return n_; }
  Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  std::int64_t degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }
  std::span<const Exponent> exponents() const noexcept { return {e_.data(), n_}; }

  void set(std::size_t i, Exponent v);

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const;
  /// Requires `other` to divide `*this`.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(std::int64_t k) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// Drops the first `count` variables (used to leave an elimination ring).
  Monomial drop_front(std::size_t count) const;
  /// Prepends `count` zero exponents.
  Monomial extend_front(std::size_t count) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    if (a.n_ != b.n_ || a.deg_ != b.deg_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
  std::int64_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind {
  DegRevLex,
  DegLex,
  Lex,
  /// The first `block` variables are compared first by degree-reverse-lex,
  /// then the rest by degree-reverse-lex; eliminates the leading block.
  Elimination,
};

/// Global monomial order over variables in their declared priority.
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(OrderKind kind, std::size_t block = 0) : kind_(kind), block_(block) {}

  static TermOrder degrevlex() { return TermOrder(OrderKind::DegRevLex); }
  static TermOrder lex() { return TermOrder(OrderKind::Lex); }
  static TermOrder elimination(std::size_t block) { return TermOrder(OrderKind::Elimination, block); }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  std::string name() const;

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  friend bool operator==(const TermOrder& a, const TermOrder& b) noexcept {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  OrderKind kind_ = OrderKind::DegRevLex;
  std::size_t block_ = 0;
};

}  // namespace rrc
