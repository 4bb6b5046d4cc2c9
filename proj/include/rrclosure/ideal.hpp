#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rrclosure/groebner.hpp"
#include "rrclosure/monomial_ideal.hpp"
#include "rrclosure/polynomial.hpp"

namespace rrc {

/// Dimension of R/I over the field; nullopt stands for an infinite colength.
using Colength = std::optional<std::uint64_t>;

namespace detail {
struct IdealState;
}

/// An ideal of K[x_1..x_d]: a generator list plus lazily computed, single
/// assignment caches (reduced basis, colength, m-primary verdict). Copies share
/// the caches; the observable value never changes.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal from_monomials(RingPtr ring, const monomial_ideal::Gens& gens);
  static Ideal from_basis(ReducedBasis basis);
  static Ideal unit(RingPtr ring);
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const;
  const std::vector<Polynomial>& generators() const;

  const ReducedBasis& basis() const;
  bool is_monomial() const { return basis().is_monomial(); }
  bool is_unit() const { return basis().is_unit(); }
  bool is_zero() const { return basis().empty(); }

  /// Minimal monomial generators of the leading-term ideal (equal to the
  /// ideal itself when it is monomial).
  const monomial_ideal::Gens& leading_ideal() const;

  Colength colength() const;
  /// Standard monomials in ascending term order; requires finite colength.
  std::vector<Monomial> standard_monomials() const;

  /// True iff 1 is not in I, the colength D is finite, and every x_i^D is in I.
  bool is_m_primary() const;
  /// Human-readable reason the ideal is not m-primary (empty if it is).
  std::string m_primary_witness() const;
  /// Throws NotMPrimary with the witness attached.
  void require_m_primary(const std::string& context) const;

  bool contains(const Polynomial& f) const { return basis().contains(f); }
  bool contains(const Ideal& other) const;

  /// Lifts of a basis of I/mI; the minimal monomial generators when monomial.
  std::vector<Polynomial> minimal_generators() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  explicit Ideal(std::shared_ptr<detail::IdealState> state) : state_(std::move(state)) {}
  std::shared_ptr<detail::IdealState> state_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::int64_t n);

/// A ∩ B through a tag variable t: (t·A + (1−t)·B) ∩ K[x].
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

enum class ColonStrategy {
  /// Monomial formulas for monomial operands, otherwise the kernel method
  /// when A has finite colength, otherwise elimination.
  Auto,
  /// Kernel of multiplication on R/C for a known C ⊆ (A : B), C zero-dimensional.
  Kernel,
  /// ∩_j (A ∩ (g_j)) / g_j via tag-variable intersections.
  Elimination,
};

/// (A : B) = {h : h·B ⊆ A}, returned with its reduced basis.
Ideal colon_ideal(const Ideal& a, const Ideal& b, ColonStrategy strategy = ColonStrategy::Auto);

/// (A : (b_1..b_r)). `lower_bound`, when given, must satisfy
/// lower_bound · B ⊆ A (checked); the kernel method then only searches
/// R/lower_bound, which is what makes the closure chain cheap.
Ideal colon_ideal(const Ideal& a, std::span<const Polynomial> b,
                  const Ideal* lower_bound = nullptr,
                  ColonStrategy strategy = ColonStrategy::Auto);

/// colength(A + (g)) computed as colength(A) − rank(R/C →·g→ R/A).
/// Requires C·g ⊆ A and both colengths finite.
std::uint64_t sum_colength(const Ideal& a, const Polynomial& g, const Ideal& c);
/// colength(A + (g_1..g_r)), each g_j with C·g_j ⊆ A.
std::uint64_t sum_colength(const Ideal& a, std::span<const Polynomial> gs, const Ideal& c);

}  // namespace rrc
