#pragma once

#include <string>

#include "idealcalc/polynomial.hpp"

namespace idealcalc {

// Shared text grammar: declared variable names, `^` for powers, `*` optional
// between factors, signed integer coefficients. Example: x0*x2 - x1^2.
Polynomial parse_polynomial(const Ring& ring, const std::string& text);

// Inverse of parse_polynomial: parse(print(f)) == f.
std::string print_polynomial(const Polynomial& f);

}  // namespace idealcalc
