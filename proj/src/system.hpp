#pragma once

#include "expr.hpp"

namespace liesym {

// The system under study, in split form:
//   u_2   = F1*u1 + F2*u1^2 + F3*u1^3
//   u_111 = G
// with F1, F2 functions of x,y,u and F3, G functions of x,y,u,u1.
// Nondegeneracy requires F2 nonzero; parse_system and the generators
// enforce it.
struct PdeSystem {
    Expr f1, f2, f3, g;
};

// A point vector field xi*dx + tau*dy + phi*du, components over x,y,u.
struct VectorField {
    Expr xi, tau, phi;
};

}  // namespace liesym
