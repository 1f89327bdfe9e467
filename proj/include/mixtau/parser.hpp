#pragma once

#include <string_view>
#include <vector>

#include "mixtau/polynomial.hpp"

namespace mixtau {

/// Parses a polynomial over `ring`. Grammar (whitespace ignored):
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := var | uint | '(' expr ')'
///
/// Integer literals are reduced mod p. Throws ParseError (with offset),
/// UnknownVariableError, or OverflowError for exponents beyond 64 bits.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma-separated generator list, e.g. "x, y^2 + 1".
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

}  // namespace mixtau
