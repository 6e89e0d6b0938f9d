#pragma once

#include <string_view>

#include "frobcount/polynomial.hpp"

namespace frobcount {

// Parses a polynomial in the ring.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*' factor) | ('/' integer))*
//   factor  := primary ['^' integer]
//   primary := integer | variable | '(' expr ')'
//
// Integers are reduced mod p; dividing by a multiple of p is an error.
// Throws ParseError with a 1-based column.
Polynomial poly_parse(std::string_view src, const Ring& ring);

}  // namespace frobcount
