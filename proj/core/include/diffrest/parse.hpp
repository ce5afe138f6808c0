#pragma once

#include <cstddef>
#include <string_view>

#include "diffrest/poly.hpp"
#include "diffrest/ratmap.hpp"

namespace diffrest {

// Text forms shared with the command line tool.
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := integer | 'x'k | '(' poly ')' | '(' ['-'] integer '/' integer ')'
//   frac   := poly ['/' poly]
//   map    := 'map' n '->' m '{' [frac (';' frac)*] '}' '|' '{' [poly (',' poly)*] '}'
// Syntax problems raise ParseError carrying the 1-based line and column.

// nvars == 0 infers the arity from the highest variable used.
Poly parse_poly(std::string_view text, CoeffRing ring, std::size_t nvars = 0);
RatFrac parse_frac(std::string_view text, CoeffRing ring, std::size_t nvars = 0);
RatMap parse_map(std::string_view text, CoeffRing ring);

}  // namespace diffrest
