#pragma once

#include <string>

#include "expr.hpp"
#include "system.hpp"

namespace liesym {

// Expression grammar: integer and p/q literals, variables x y u and jet
// coordinates u1..u222, symbols xi/tau/phi/F1/F2/F3/G with derivative
// suffixes (_x _y _u _u1, repeatable), series coefficients F3[k]/G[k],
// operators + - * / ^ with standard precedence, parentheses. `^` takes a
// positive integer and `/` a divisor that evaluates to a nonzero literal,
// so results stay polynomial. Inverse of the canonical serialization.
Expr parse_expr(const std::string& text);

// System file (.sys): assignments F1 = <expr> ... G = <expr>, each exactly
// once, `#` comments. F1/F2 over x,y,u; F3/G over x,y,u,u1. Throws
// DegenerateError when F2 is the zero polynomial.
PdeSystem parse_system(const std::string& text);

// Vector-field file (.vf): assignments xi/tau/phi, components over x,y,u
// only (no jets, no function symbols).
VectorField parse_vector_field(const std::string& text);

}  // namespace liesym
