#include "rrclosure/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

#include "rrclosure/error.hpp"

namespace rrc::monomial_ideal {

namespace {

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

// Restriction of the generators to variables [first, n) with the leading
// exponents already fixed; counts standard monomials recursively.
std::optional<std::uint64_t> count_from(std::vector<const Monomial*> gens, std::size_t first,
                                        std::size_t n) {
  for (const Monomial* g : gens) {
    bool unit = true;
    for (std::size_t i = first; i < n; ++i)
      if ((*g)[i] != 0) {
        unit = false;
        break;
      }
    if (unit) return 0;
  }
  if (first == n) return 1;

  if (first + 1 == n) {
    std::int64_t best = -1;
    for (const Monomial* g : gens)
      if (best < 0 || (*g)[first] < best) best = (*g)[first];
    if (best < 0) return std::nullopt;
    return static_cast<std::uint64_t>(best);
  }

  // bound on the current variable from a pure power in the remaining ones
  std::int64_t bound = -1;
  for (const Monomial* g : gens) {
    bool pure = true;
    for (std::size_t i = first + 1; i < n; ++i)
      if ((*g)[i] != 0) {
        pure = false;
        break;
      }
    if (pure && (bound < 0 || (*g)[first] < bound)) bound = (*g)[first];
  }
  if (bound < 0) return std::nullopt;

  std::sort(gens.begin(), gens.end(),
            [first](const Monomial* a, const Monomial* b) { return (*a)[first] < (*b)[first]; });

  if (first + 2 == n) {
    // two variables left: y-bound is the running minimum over admissible gens
    std::uint64_t total = 0;
    std::int64_t ymin = -1;
    std::size_t k = 0;
    for (std::int64_t a = 0; a < bound; ++a) {
      while (k < gens.size() && (*gens[k])[first] <= a) {
        std::int64_t y = (*gens[k])[first + 1];
        if (ymin < 0 || y < ymin) ymin = y;
        ++k;
      }
      if (ymin < 0) return std::nullopt;
      total += static_cast<std::uint64_t>(ymin);
    }
    return total;
  }

  std::uint64_t total = 0;
  std::vector<const Monomial*> active;
  std::size_t k = 0;
  for (std::int64_t a = 0; a < bound; ++a) {
    while (k < gens.size() && (*gens[k])[first] <= a) active.push_back(gens[k++]);
    auto c = count_from(active, first + 1, n);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

void enumerate_from(const Gens& gens, std::size_t nvars, Monomial& current, std::size_t var,
                    const std::function<void(const Monomial&)>& visit) {
  if (var == nvars) {
    if (!contains(gens, current)) visit(current);
    return;
  }
  // the pure-power bound in this variable limits the loop; membership is
  // checked at the leaves and used to prune
  for (Monomial::Exponent a = 0;; ++a) {
    current.set(var, a);
    Monomial probe(current);
    for (std::size_t i = var + 1; i < nvars; ++i) probe.set(i, 0);
    if (contains(gens, probe)) break;
    enumerate_from(gens, nvars, current, var + 1, visit);
  }
  current.set(var, 0);
}

}  // namespace

Gens minimalize(Gens gens) {
  if (gens.empty()) return gens;
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Gens out;
  if (gens.front().size() == 2) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    std::int64_t ymin = std::numeric_limits<std::int64_t>::max();
    for (const auto& g : gens) {
      if (g[1] < ymin) {
        out.push_back(g);
        ymin = g[1];
      }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

bool contains(const Gens& minimal, const Monomial& m) {
  for (const auto& g : minimal)
    if (g.divides(m)) return true;
  return false;
}

Gens sum(const Gens& a, const Gens& b) {
  Gens all(a);
  all.insert(all.end(), b.begin(), b.end());
  return minimalize(std::move(all));
}

Gens product(const Gens& a, const Gens& b) {
  Gens all;
  all.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) all.push_back(x * y);
  return minimalize(std::move(all));
}

Gens power(const Gens& a, std::int64_t n, std::size_t nvars) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative ideal power");
  Gens result{Monomial(nvars)};
  for (std::int64_t i = 0; i < n; ++i) result = product(result, a);
  return result;
}

Gens intersection(const Gens& a, const Gens& b) {
  Gens all;
  all.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) all.push_back(lcm(x, y));
  return minimalize(std::move(all));
}

Gens colon(const Gens& a, const Monomial& m) {
  Gens all;
  all.reserve(a.size());
  for (const auto& x : a) all.push_back(x / gcd(x, m));
  return minimalize(std::move(all));
}

Gens colon(const Gens& a, const Gens& b) {
  if (b.empty()) {
    if (a.empty()) return {};
    return {Monomial(a.front().size())};
  }
  Gens result = colon(a, b.front());
  for (std::size_t i = 1; i < b.size(); ++i) result = intersection(result, colon(a, b[i]));
  return result;
}

bool is_subset(const Gens& a, const Gens& b) {
  for (const auto& m : a)
    if (!contains(b, m)) return false;
  return true;
}

std::optional<std::uint64_t> colength(const Gens& gens, std::size_t nvars) {
  std::vector<const Monomial*> ptrs;
  ptrs.reserve(gens.size());
  for (const auto& g : gens) ptrs.push_back(&g);
  return count_from(std::move(ptrs), 0, nvars);
}

std::optional<std::size_t> missing_pure_power(const Gens& gens, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& g : gens) {
      if (g[v] == g.degree()) {
        found = true;
        break;
      }
    }
    if (!found) return v;
  }
  return std::nullopt;
}

void for_each_standard(const Gens& gens, std::size_t nvars,
                       const std::function<void(const Monomial&)>& visit) {
  if (missing_pure_power(gens, nvars))
    throw Error(ErrorCode::NotMPrimary, "standard monomials are infinite");
  Monomial current(nvars);
  enumerate_from(gens, nvars, current, 0, visit);
}

}  // namespace rrc::monomial_ideal
