#include "rrclosure/monomial.hpp"

#include "rrclosure/error.hpp"

namespace rrc {

namespace {

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  Monomial::Exponent r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "monomial exponent overflow");
  return r;
}

void check_nvars(std::size_t n) {
  if (n > kMaxVariables)
    throw Error(ErrorCode::InvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
}

int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) { check_nvars(nvars); }

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : Monomial(std::span<const Exponent>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const Exponent> exps) : n_(static_cast<std::uint8_t>(exps.size())) {
  check_nvars(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    e_[i] = exps[i];
    deg_ += exps[i];
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent v) {
  if (v < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  deg_ += static_cast<std::int64_t>(v) - e_[i];
  e_[i] = v;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = checked_add(e_[i], other.e_[i]);
  r.deg_ = deg_ + other.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this))
    throw Error(ErrorCode::InvalidArgument, "monomial division is not exact");
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[i] - other.e_[i];
  r.deg_ = deg_ - other.deg_;
  return r;
}

Monomial Monomial::pow(std::int64_t k) const {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative monomial power");
  Monomial r(*this);
  r.deg_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t v = static_cast<std::int64_t>(e_[i]) * k;
    if (v > INT32_MAX) throw Error(ErrorCode::Overflow, "monomial exponent overflow");
    r.e_[i] = static_cast<Exponent>(v);
    r.deg_ += v;
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  r.deg_ = 0;
  for (std::size_t i = 0; i < a.n_; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  r.deg_ = 0;
  for (std::size_t i = 0; i < a.n_; ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial Monomial::drop_front(std::size_t count) const {
  Monomial r(n_ - count);
  for (std::size_t i = count; i < n_; ++i) r.set(i - count, e_[i]);
  return r;
}

Monomial Monomial::extend_front(std::size_t count) const {
  Monomial r(n_ + count);
  for (std::size_t i = 0; i < n_; ++i) r.set(i + count, e_[i]);
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= static_cast<std::size_t>(e_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Elimination: return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.size();
  switch (kind_) {
    case OrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    case OrderKind::DegLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      [[fallthrough]];
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case OrderKind::Elimination: {
      int c = degrevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return degrevlex_range(a, b, block_, n);
    }
  }
  return 0;
}

}  // namespace rrc
