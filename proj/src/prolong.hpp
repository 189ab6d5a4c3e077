#pragma once

#include "expr.hpp"
#include "system.hpp"

namespace liesym {

// The generator with unexpanded components: xi, tau, phi kept as symbols.
VectorField symbolic_vector_field();

// True when every component contains base variables only.
bool is_concrete(const VectorField& v);

// Componentwise linear combinations (concrete fields).
VectorField vf_add(const VectorField& a, const VectorField& b);
VectorField vf_scale(const Rational& c, const VectorField& v);

// Coefficient of d/du_J in the third prolongation, J = (jx, jy) with
// 1 <= jx+jy <= 3. Computed from the characteristic Q = phi - xi*u1 - tau*u2
// as D_J(Q) + xi*u_{J+x} + tau*u_{J+y}; the order-4 jets produced by D_J
// must cancel exactly against the two correction terms, which is asserted.
Expr prolong_coefficient(const VectorField& v, int jx, int jy);

// Action of the prolonged field on an expression with jets of order <= 3:
// xi*d/dx + tau*d/dy + phi*d/du + sum_J phi^J d/du_J. Linear in e.
Expr apply_pr3(const VectorField& v, const Expr& e);

}  // namespace liesym
