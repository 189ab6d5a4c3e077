#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prolong.hpp"
#include "reference_data.hpp"

using namespace liesym;

namespace {

Expr X() { return atom_expr(Atom::x()); }
Expr Y() { return atom_expr(Atom::y()); }
Expr J(int nx, int ny) { return atom_expr(Atom::jet(nx, ny)); }
Expr FnA(Fn f, int dx = 0, int dy = 0, int du = 0) { return atom_expr(Atom::fn(f, dx, dy, du)); }

struct Gen {
    std::mt19937 rng{7151623};
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    Rational coeff() {
        int n = pick(-5, 5);
        if (n == 0) n = 3;
        return rat_of(n, pick(1, 3));
    }
    Expr poly_xyu() {
        Expr e;
        int terms = pick(0, 3);
        for (int t = 0; t < terms; ++t) {
            Expr m = Expr::constant(coeff());
            for (const Atom& a : {Atom::x(), Atom::y(), Atom::u()})
                m = m * Expr::from_atom(a, pick(0, 2));
            e += m;
        }
        return e;
    }
    VectorField field() { return {poly_xyu(), poly_xyu(), poly_xyu()}; }
};

}  // namespace

TEST_CASE("first-order prolongation coefficients of the symbolic field") {
    VectorField v = symbolic_vector_field();
    Expr phix = prolong_coefficient(v, 1, 0);
    Expr expected = FnA(Fn::phi, 1, 0, 0) + (FnA(Fn::phi, 0, 0, 1) - FnA(Fn::xi, 1, 0, 0)) * J(1, 0) -
                    FnA(Fn::xi, 0, 0, 1) * J(1, 0).pow(2) - FnA(Fn::tau, 1, 0, 0) * J(0, 1) -
                    FnA(Fn::tau, 0, 0, 1) * (J(1, 0) * J(0, 1));
    CHECK(phix == expected);
    CHECK(phix == -ref::parse_ref(ref::kBracketPhiX));
    CHECK(prolong_coefficient(v, 0, 1) == -ref::parse_ref(ref::kBracketPhiY));
}

TEST_CASE("higher prolongation coefficients match the hand-checked expansions") {
    VectorField v = symbolic_vector_field();
    CHECK(prolong_coefficient(v, 2, 0) == -ref::parse_ref(ref::kBracketPhiXX));
    CHECK(prolong_coefficient(v, 1, 1) == -ref::parse_ref(ref::kBracketPhiXY));
    CHECK(prolong_coefficient(v, 3, 0) == -ref::parse_ref(ref::kBracketPhiXXX));
}

TEST_CASE("constant and translation fields prolong to zero") {
    VectorField du{Expr(), Expr(), Expr::constant(1)};
    VectorField dx{Expr::constant(1), Expr(), Expr()};
    for (int jx = 0; jx <= 3; ++jx)
        for (int jy = 0; jx + jy <= 3; ++jy) {
            if (jx + jy < 1) continue;
            CHECK(prolong_coefficient(du, jx, jy).is_zero());
            CHECK(prolong_coefficient(dx, jx, jy).is_zero());
        }
    CHECK(apply_pr3(dx, J(1, 0)).is_zero());
}

TEST_CASE("prolonged action on the two defining expressions") {
    VectorField v = symbolic_vector_field();
    Expr f = atom_expr(Atom::rhs(Rhs::F1)) * J(1, 0) +
             atom_expr(Atom::rhs(Rhs::F2)) * J(1, 0).pow(2) +
             atom_expr(Atom::rhs(Rhs::F3)) * J(1, 0).pow(3);
    CHECK(apply_pr3(v, J(0, 1) - f) == ref::parse_ref(ref::kCond1Raw));
    CHECK(apply_pr3(v, J(3, 0) - atom_expr(Atom::rhs(Rhs::G))) == ref::parse_ref(ref::kCond2Raw));
}

TEST_CASE("scaling-type concrete field example") {
    // xi = x/2, tau = y: phi^x = D_x(-x/2*u1 - y*u2) + x/2*u11 + y*u12
    VectorField v{Rational(1, 2) * X(), Y(), Expr()};
    CHECK(prolong_coefficient(v, 1, 0) == Rational(-1, 2) * J(1, 0));
    CHECK(prolong_coefficient(v, 0, 1) == -J(0, 1));
    CHECK(prolong_coefficient(v, 3, 0) == Rational(-3, 2) * J(3, 0));
}

TEST_CASE("inputs already at the jet budget are rejected") {
    VectorField v = symbolic_vector_field();
    CHECK_THROWS_AS(apply_pr3(v, Expr::from_atom(Atom::jet(4, 0))), KernelError);
    CHECK_THROWS_AS(prolong_coefficient(v, 4, 0), KernelError);
    CHECK_THROWS_AS(prolong_coefficient(v, 0, 0), KernelError);
    VectorField bad{J(1, 0), Expr(), Expr()};
    CHECK_THROWS_AS(prolong_coefficient(bad, 1, 0), KernelError);
}

TEST_CASE("property: prolongation is linear in the field") {
    Gen g;
    for (int i = 0; i < 1000; ++i) {
        VectorField v = g.field(), w = g.field();
        Rational a = g.coeff(), b = g.coeff();
        VectorField combo = vf_add(vf_scale(a, v), vf_scale(b, w));
        int jx = g.pick(0, 3), jy = g.pick(0, 3 - jx);
        if (jx + jy == 0) jx = 1;
        CHECK(prolong_coefficient(combo, jx, jy) ==
              a * prolong_coefficient(v, jx, jy) + b * prolong_coefficient(w, jx, jy));
    }
}

TEST_CASE("property: coefficients satisfy the jet recursion") {
    Gen g;
    VectorField sym = symbolic_vector_field();
    for (int i = 0; i < 1000; ++i) {
        VectorField v = g.pick(0, 3) == 0 ? sym : g.field();
        int jx = g.pick(0, 2), jy = g.pick(0, 2 - jx);
        if (jx + jy == 0) jx = 1;
        Expr base = prolong_coefficient(v, jx, jy);
        for (int dir = 0; dir <= 1; ++dir) {
            Expr lhs = prolong_coefficient(v, jx + (dir == 0), jy + (dir == 1));
            Expr rhs = total_derivative(base, dir) -
                       total_derivative(v.xi, dir) * J(jx + 1, jy) -
                       total_derivative(v.tau, dir) * J(jx, jy + 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("property: prolonged action is linear in the expression") {
    Gen g;
    VectorField sym = symbolic_vector_field();
    for (int i = 0; i < 1000; ++i) {
        Expr a = g.poly_xyu() * J(g.pick(1, 2), 0) + g.poly_xyu();
        Expr b = g.poly_xyu() * J(0, g.pick(1, 2)) + g.poly_xyu();
        Rational c = g.coeff();
        VectorField v = g.pick(0, 1) ? sym : g.field();
        CHECK(apply_pr3(v, c * a + b) == c * apply_pr3(v, a) + apply_pr3(v, b));
    }
}
