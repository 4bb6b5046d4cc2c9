#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrclosure/hilbert.hpp"

namespace rrc {

/// A parsed problem file:
///
///   # comment
///   ring: QQ[x,y]            (or Fp:32003[x,y]; optional)
///   order: degrevlex         (optional; deglex and lex also accepted)
///   ideal: x^10, y^5, x*y^4,
///          x^8*y             (indented lines continue the previous key)
///   reduction: y^5 + x^10 + x^8*y, x*y^4
///   mode: heuristic
///   seed: 0
///   k: 3
///
/// Without a ring line the field is QQ and the variables are the identifiers
/// of the expressions in alphabetical order.
struct Problem {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::optional<std::vector<Polynomial>> reduction;
  std::optional<Mode> mode;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> k;
  bool ring_inferred = false;

  Ideal ideal() const { return Ideal(ring, generators); }
};

/// Errors carry byte offset, line and column relative to `text`.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

/// Renders a problem so that parse_problem(print_problem(p)) reproduces it.
std::string print_problem(const Problem& problem);

/// One expression in the variables of `ring`: integers, variables, + - * /
/// (by constants), ^ with a nonnegative integer exponent, and parentheses.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text);

Mode parse_mode(std::string_view text);

}  // namespace rrc
