#pragma once

// Text syntax for polynomials, principal parts and rational functions.
//
//   poly      := term (('+' | '-') term)*
//   term      := [coeff ['*']] ['z' ['^' int]]
//   coeff     := real | real 'i' | 'i' | '(' real ',' real ')'
//   laurent   := poly syntax with negative powers allowed
//   rational  := laurent | group '/' group,   group := laurent | '(' laurent ')'
//
// Examples: "z^2", "2z^2", "(0,1)*z^3 - 0.5z + 1", "1.5i z", "(1)/(1-z)".
// Principal parts use negative powers only: "z^-1", "2*z^-2 + (0,1)*z^-1".

#include <map>
#include <string>
#include <string_view>

#include "expc/algebra.hpp"

namespace expc {

/// Power -> coefficient for a finite Laurent polynomial literal.
std::map<int, cplx> parse_laurent_terms(std::string_view text);

PolyC parse_poly(std::string_view text);
PrincipalPart parse_principal(std::string_view text);
RationalC parse_rational(std::string_view text);

/// Round-trips through parse_poly exactly: "(re,im)*z^k + ...", "0" for the zero polynomial.
std::string format_poly(const PolyC& p);
std::string format_principal(const PrincipalPart& h);

}  // namespace expc
