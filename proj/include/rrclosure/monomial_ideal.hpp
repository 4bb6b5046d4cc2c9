#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rrclosure/monomial.hpp"

/// Combinatorics of monomial ideals given by generator lists. None of these
/// touch coefficients; they back every "without Groebner basis" fast path.
namespace rrc::monomial_ideal {

using Gens = std::vector<Monomial>;

/// Unique minimal generators, sorted by degree then exponents (deterministic).
Gens minimalize(Gens gens);

bool contains(const Gens& minimal, const Monomial& m);
Gens sum(const Gens& a, const Gens& b);
Gens product(const Gens& a, const Gens& b);
Gens power(const Gens& a, std::int64_t n, std::size_t nvars);
Gens intersection(const Gens& a, const Gens& b);
Gens colon(const Gens& a, const Monomial& m);
Gens colon(const Gens& a, const Gens& b);
bool is_subset(const Gens& a, const Gens& b);  // (a) ⊆ (b)

/// Number of monomials outside the ideal; nullopt when infinite.
std::optional<std::uint64_t> colength(const Gens& gens, std::size_t nvars);

/// Index of a variable that has no pure power in the ideal, if any.
std::optional<std::size_t> missing_pure_power(const Gens& gens, std::size_t nvars);

/// Calls `visit` for every standard monomial (ideal must be m-primary).
void for_each_standard(const Gens& gens, std::size_t nvars,
                       const std::function<void(const Monomial&)>& visit);

}  // namespace rrc::monomial_ideal
