#pragma once

#include <string_view>

#include "kouch/polynomial.hpp"

namespace kouch {

// Parses an expression in x and y into a fully expanded polynomial.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (['*'] unary)*        juxtaposition multiplies: 2xy
//   unary   := ('-' | '+') unary | power
//   power   := primary ['^' unary]         the exponent must evaluate to a
//                                          nonnegative integer constant
//   primary := INT ['/' INT] | 'x' | 'y' | '(' expr ')'
//
// Throws ParseError (with the byte offset) on malformed input, unknown
// identifiers and invalid exponents.
Polynomial parse(std::string_view text);

inline constexpr unsigned kMaxExponent = 1000;

}  // namespace kouch
