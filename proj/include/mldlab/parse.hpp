#pragma once

#include "mldlab/bipoly.hpp"

#include <string_view>
#include <vector>

namespace mldlab {

/// Parses a polynomial in x, y (grammar in docs/grammar.md).
/// Throws SyntaxError with a character offset, or Error(UnknownVariable).
BiPoly poly_parse(std::string_view text);

/// Parses a generator list "(g1, g2, ...)"; the parentheses are optional.
std::vector<BiPoly> parse_generators(std::string_view text);

} // namespace mldlab
