#include "prolong.hpp"

namespace liesym {

VectorField symbolic_vector_field() {
    return {atom_expr(Atom::fn(Fn::xi)), atom_expr(Atom::fn(Fn::tau)),
            atom_expr(Atom::fn(Fn::phi))};
}

bool is_concrete(const VectorField& v) {
    for (const Expr* e : {&v.xi, &v.tau, &v.phi})
        for (const auto& [m, c] : e->terms())
            for (const auto& [atom, exp] : m)
                if (!atom.is_base()) return false;
    return true;
}

VectorField vf_add(const VectorField& a, const VectorField& b) {
    return {a.xi + b.xi, a.tau + b.tau, a.phi + b.phi};
}

VectorField vf_scale(const Rational& c, const VectorField& v) {
    return {c * v.xi, c * v.tau, c * v.phi};
}

namespace {

// Components are either all base-variable expressions or exactly the three
// unexpanded symbols; anything else would make the chain rule in the total
// derivatives silently wrong.
void validate_field(const VectorField& v) {
    VectorField s = symbolic_vector_field();
    if (v.xi == s.xi && v.tau == s.tau && v.phi == s.phi) return;
    if (is_concrete(v)) return;
    throw KernelError("vector field must be concrete over x,y,u or the symbolic generator");
}

}  // namespace

Expr prolong_coefficient(const VectorField& v, int jx, int jy) {
    if (jx < 0 || jy < 0 || jx + jy < 1 || jx + jy > kBoundaryJetOrder)
        throw KernelError("prolongation multi-index must have order 1..3");
    validate_field(v);
    Expr q = v.phi - v.xi * atom_expr(Atom::jet(1, 0)) - v.tau * atom_expr(Atom::jet(0, 1));
    for (int i = 0; i < jx; ++i) q = total_derivative(q, 0);
    for (int i = 0; i < jy; ++i) q = total_derivative(q, 1);
    Expr out = q + v.xi * atom_expr(Atom::jet(jx + 1, jy)) +
               v.tau * atom_expr(Atom::jet(jx, jy + 1));
    if (max_jet_order(out) > kBoundaryJetOrder)
        throw KernelError("residual order-4 jets in prolongation coefficient");
    return out;
}

Expr apply_pr3(const VectorField& v, const Expr& e) {
    if (max_jet_order(e) > kBoundaryJetOrder)
        throw KernelError("apply_pr3 expects jets of order <= 3");
    validate_field(v);
    Expr out = v.xi * pdiff(e, Atom::x()) + v.tau * pdiff(e, Atom::y()) +
               v.phi * pdiff(e, Atom::u());
    for (int jx = 0; jx <= 3; ++jx) {
        for (int jy = 0; jx + jy <= 3; ++jy) {
            if (jx + jy < 1) continue;
            Expr pe = pdiff(e, Atom::jet(jx, jy));
            if (pe.is_zero()) continue;
            out += prolong_coefficient(v, jx, jy) * pe;
        }
    }
    return out;
}

}  // namespace liesym
