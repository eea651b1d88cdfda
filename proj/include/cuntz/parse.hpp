#pragma once

#include <string>

#include "cuntz/element.hpp"

namespace cuntz {

// Grammar (whitespace between tokens is free):
//
//   element := ['+'|'-'] term (('+'|'-') term)*
//   term    := [coeff '*'] factor+
//   factor  := 'S' digit ['^*'] | 'I' | '(' element ')'
//   coeff   := real | '(' real ('+'|'-') real 'i' ')'
//
// Juxtaposed factors multiply left to right; products are reduced to
// normal form.  Digits at or above N are rejected.  Syntax errors carry
// the byte position in the message.
Element parse_element(const std::string& text, int N);

// Canonical printer; parse_element(print_element(e), e.N()) reproduces e
// exactly (coefficients are printed with 17 significant digits).
std::string print_element(const Element& e);

std::string format_complex(Cx z); // "a", "(a+bi)" or "(a-bi)"

} // namespace cuntz
