#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <span>
#include <vector>

#include "rrclosure/ideal.hpp"

namespace rrc {

enum class Mode { Heuristic, Certified };

std::string_view mode_name(Mode mode);

/// I, I^2, I^3, ... computed incrementally and kept for reuse. Powers are
/// appended under a lock; returned references stay valid.
class IdealPowers {
 public:
  explicit IdealPowers(Ideal base);

  const Ideal& base() const noexcept { return base_; }
  /// I^n for n ≥ 0 (I^0 is the unit ideal).
  const Ideal& power(std::int64_t n);

 private:
  Ideal base_;
  std::deque<Ideal> powers_;  // powers_[n] = I^n
  std::mutex mu_;
};

struct PoincareOptions {
  Mode mode = Mode::Heuristic;
  /// Consecutive vanishing numerator coefficients required to stop in
  /// heuristic mode; 0 selects d + 3.
  int window = 0;
  /// Largest sample index either mode may reach before BoundTooLarge.
  std::uint64_t bound_cap = 400;
};

struct PoincareData {
  std::vector<std::int64_t> numerator;  // a_0..a_s, trailing zeros trimmed
  int d_effective = 0;                  // denominator exponent
  std::int64_t e0 = 0;
  std::int64_t pn = 0;
  Mode mode = Mode::Heuristic;
  int window_used = 0;
  std::vector<std::uint64_t> samples;   // h(0), h(1), ... as computed
};

/// h_I(n) = colength(I^{n+1}).
std::uint64_t hilbert_samuel(IdealPowers& powers, std::int64_t n);

/// colength(I^{n+1} + (x)), the Hilbert-Samuel function of I/(x) in R/(x).
std::uint64_t hilbert_samuel_quotient(IdealPowers& powers, const Polynomial& x, std::int64_t n);

/// Numerator of the Poincare series by finite differences of h. In heuristic
/// mode sampling stops after `window` (default d+3) consecutive zero
/// coefficients; in certified mode it runs to f(e0, d) + 1 + d.
PoincareData poincare(IdealPowers& powers, const PoincareOptions& opts = {});
PoincareData poincare_quotient(IdealPowers& powers, const Polynomial& x,
                               const PoincareOptions& opts = {});

/// e_j = Σ_i binom(i, j)·a_i for j = 0..d_effective.
std::vector<std::int64_t> hilbert_coefficients(const PoincareData& data);

/// p(n) = Σ_j (−1)^j e_j binom(n + D − j, D − j), valid for every integer n.
std::int64_t hilbert_polynomial_value(std::span<const std::int64_t> coefficients, int d_effective,
                                      std::int64_t n);

/// Rebuilds h(0..count−1) from a numerator over (1−X)^{D+1}.
std::vector<std::int64_t> reconstruct_samples(const PoincareData& data, std::size_t count);

/// pn(I; x_1..x_d) = max(pn(I), pn(I/(x_i))).
std::int64_t postulation_with_reduction(IdealPowers& powers, std::span<const Polynomial> xs,
                                        const PoincareOptions& opts = {});

}  // namespace rrc
