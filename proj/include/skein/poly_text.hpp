#pragma once

#include <string>
#include <string_view>

#include "skein/laurent.hpp"

namespace skein {

// Canonical text form, one term per exponent in ascending order:
//
//   one-variable: "a^-2 + 1 + a^4",  "2*a^2 - a^4",  "0"
//   two-variable: "2*a^2 + a^2*z^2 - a^4"  (ordered by (a-exp, z-exp))
//
// Coefficient 1 is omitted next to a monomial; over Z negative coefficients
// fold into " - " separators; modular coefficients print as residues in
// [1, p-1].  parse(format(p)) == p, and parsing rejects duplicate exponents
// (syntax) and descending order (non_ascending).
std::string format_poly(const Laurent1& p);
std::string format_poly(const Laurent2& p);

Laurent1 parse_poly1(std::string_view text, Ring ring = integers);
Laurent2 parse_poly2(std::string_view text, Ring ring = integers);

} // namespace skein
