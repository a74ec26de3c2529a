#ifndef DIGITSEAL_POLYTEXT_HPP
#define DIGITSEAL_POLYTEXT_HPP

#include "digitseal/intpoly.hpp"

#include <string>
#include <string_view>

namespace digitseal {

/// Parse either of the two text forms:
///   - symbolic, e.g. "x^4+x^3-x+1" (case-insensitive variable, optional
///     whitespace, explicit coefficients like "2x^3" or "-3");
///   - comma-separated coefficients lowest degree first, e.g. "1,-1,0,1,1".
/// Throws std::invalid_argument on malformed input.
IntPoly parse_poly(std::string_view text);

/// Symbolic form, highest degree first: "x^5+x^4+1", "-2x^3+x-4", "0".
std::string to_symbolic(const IntPoly& p);

/// Comma-separated coefficients lowest degree first: "1,0,0,0,1,1".
std::string to_coeff_list(const IntPoly& p);

/// Parse a run of '+'/'-' characters as a {-1,1}-coefficient polynomial whose
/// first character is the coefficient of the highest power: "++-" means
/// X^2+X-1. Whitespace (including newlines) between signs is skipped.
IntPoly parse_sign_string(std::string_view text);

/// Inverse of parse_sign_string; requires every coefficient to be +-1.
std::string to_sign_string(const IntPoly& p);

} // namespace digitseal

#endif
