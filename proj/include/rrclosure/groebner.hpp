#pragma once

#include <span>
#include <vector>

#include "rrclosure/polynomial.hpp"

namespace rrc {

/// The unique reduced Groebner basis of an ideal under the ring's order:
/// monic, pairwise reduced, sorted by ascending leading monomial.
class ReducedBasis {
 public:
  ReducedBasis() = default;
  /// Takes elements that already form a reduced basis and sorts them.
  ReducedBasis(RingPtr ring, std::vector<Polynomial> elements);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }

  std::vector<Monomial> leading_monomials() const;
  bool is_monomial() const noexcept { return monomial_; }
  bool is_unit() const noexcept { return elems_.size() == 1 && elems_[0].is_constant(); }

  /// Remainder with no term divisible by a leading monomial of the basis.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const ReducedBasis& a, const ReducedBasis& b);

 private:
  RingPtr ring_;
  std::vector<Polynomial> elems_;
  bool monomial_ = true;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full normal form of f by the divisor list (need not be a Groebner basis).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller criteria; monomial inputs short-circuit to minimalization.
ReducedBasis groebner_basis(const RingPtr& ring, std::vector<Polynomial> generators);

}  // namespace rrc
