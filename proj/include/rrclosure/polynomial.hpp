#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rrclosure/monomial.hpp"
#include "rrclosure/scalar.hpp"

namespace rrc {

/// Polynomial ring K[x_1..x_d] with a global term order.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> variables, TermOrder order = TermOrder::degrevlex());

  const Field& field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const TermOrder& order() const noexcept { return order_; }

  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  Field field_;
  std::vector<std::string> vars_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> variables,
                  TermOrder order = TermOrder::degrevlex());

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial; terms are kept sorted in strictly descending term
/// order with no zero coefficients, so structural equality is equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, const Scalar& c);
  Polynomial(RingPtr ring, const Monomial& m, const Scalar& c = Scalar(1));
  /// Terms in any order; duplicates are combined and zeros dropped.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  /// Throws ZeroPolynomial on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coefficient() const { return leading_term().coefficient; }
  std::int64_t total_degree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(std::int64_t n) const;
  Polynomial monic() const;

  /// this - c*m*g, the elementary reduction step.
  Polynomial sub_mul(const Scalar& c, const Monomial& m, const Polynomial& g) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void check_same_ring(const Polynomial& g) const;
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

/// Leading term under an explicit order (the ring's order is used elsewhere).
Term leading_term(const Polynomial& f, const TermOrder& order);

/// Exact quotient f/g; throws InvalidArgument if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace rrc
