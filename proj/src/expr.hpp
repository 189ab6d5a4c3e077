#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atom.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace liesym {

constexpr int kMaxExponent = 64;

// Budget violations (exponent overflow, jet order exhaustion). These signal
// malformed or out-of-scope input rather than kernel bugs.
struct BudgetError : Error {
    using Error::Error;
};

// Power product of atoms, sorted by the canonical atom ordering with
// strictly positive exponents. The empty monomial is the constant 1.
using Monomial = std::vector<std::pair<Atom, int>>;

// Term ordering for canonical serialization and leading-term selection:
// reverse lexicographic over atom-indexed exponent vectors, so x^2 sorts
// before x, and any atom-bearing term sorts before the constant term.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial monomial_mul(const Monomial& a, const Monomial& b);
// a / b, or nullopt when some exponent of b exceeds a's.
std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b);

// Multivariate polynomial over Rational with Monomial keys. Always kept in
// canonical form: no zero coefficients, monomials sorted, exponents merged.
// Structural equality of canonical forms decides identical vanishing.
class Expr {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Expr() = default;
    static Expr constant(const Rational& c);
    static Expr constant(long n) { return constant(Rational(n)); }
    static Expr from_atom(const Atom& a, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_value() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Accumulates c * m, erasing the entry when the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    Expr operator-() const;
    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o);
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator*(const Rational& c, Expr e);
    Expr pow(int k) const;

    bool operator==(const Expr& o) const { return terms_ == o.terms_; }
    bool operator!=(const Expr& o) const { return !(*this == o); }
    // Total order on canonical forms, used only for deterministic sorting.
    bool operator<(const Expr& o) const;

private:
    TermMap terms_;
};

inline Expr atom_expr(const Atom& a) { return Expr::from_atom(a); }

// --- calculus -------------------------------------------------------------

// Partial derivative with respect to a base variable or jet coordinate.
// Jet coordinates are mutually independent; differentiating a fn symbol by
// a jet yields 0; differentiating F3/G by u1 appends to the multiset.
Expr pdiff(const Expr& e, const Atom& v);

// Convenience: repeated pdiff by a derivative-count triple (x,y,u).
Expr pdiff_multi(const Expr& e, int dx, int dy, int du);

// Total derivative D_x (dir 0) or D_y (dir 1) on the jet prolongation.
// Input must not contain jets of order 4 (the budget is reserved for the
// output, which may reach order 4 transiently during prolongation).
Expr total_derivative(const Expr& e, int dir);

// Simultaneous replacement of jet coordinates, applied highest order first.
// A binding whose value mentions any bound key of equal or higher order is
// rejected as cyclic.
Expr substitute_jets(const Expr& e, const std::vector<std::pair<Atom, Expr>>& bindings);

// General power-respecting substitution; atoms absent from the map persist.
Expr substitute_atoms(const Expr& e, const std::map<Atom, Expr>& bindings);

// Coefficient extraction: exponent vector over vars -> coefficient free of
// vars.
std::map<std::vector<int>, Expr> collect(const Expr& e, const std::vector<Atom>& vars);

// Full evaluation; every atom of e must be bound.
Rational eval(const Expr& e, const std::map<Atom, Rational>& point);

// Replaces every plain F3/G derivative symbol by its u1-power series
// truncated at index N (series coefficients become indexed atoms that
// depend on x,y,u only).
Expr series_expand(const Expr& e, int N);

// Exact u1-series coefficient at power k (exact because contributions to
// u1^k only involve series indices <= k + number of u1-derivatives).
Expr u1_series_coefficient(const Expr& e, int k);

// --- polynomial utilities ---------------------------------------------------

// Exact quotient a/b in the polynomial ring, or nullopt if b does not
// divide a.
std::optional<Expr> divide_exact(const Expr& a, const Expr& b);

// e scaled by the unique positive rational making all coefficients integer
// with gcd 1, then sign-adjusted so the leading coefficient is positive.
Expr scale_canonical(const Expr& e);

// r such that b == r * a (nonzero a, b with identical monomial support),
// nullopt otherwise. proportional() accepts the zero/zero pair as well.
std::optional<Rational> proportionality_ratio(const Expr& a, const Expr& b);
bool proportional(const Expr& a, const Expr& b);

int max_jet_order(const Expr& e);
bool contains_atom(const Expr& e, const Atom& a);
bool contains_kind(const Expr& e, Atom::Kind k);
std::vector<Atom> atoms_of_kind(const Expr& e, Atom::Kind k);

// Canonical serialization, e.g. "-3*xi_u*u11^2 + phi_u*u111".
std::string to_string(const Expr& e);

// --- rational functions -----------------------------------------------------

// Quotient of polynomials. A reduced representative is not required;
// equality is decided by cross-multiplication. simplify() removes rational
// content, cancels the denominator when it divides the numerator exactly,
// and strips common monomial factors.
class RationalFn {
public:
    RationalFn() : num_(), den_(Expr::constant(1)) {}
    explicit RationalFn(Expr n) : num_(std::move(n)), den_(Expr::constant(1)) {}
    RationalFn(Expr n, Expr d);
    static RationalFn constant(const Rational& c) { return RationalFn(Expr::constant(c)); }

    const Expr& num() const { return num_; }
    const Expr& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator-() const;
    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;

    bool equals(const RationalFn& o) const;

    // Evaluation at a point; the denominator must not vanish there.
    Rational eval_at(const std::map<Atom, Rational>& point) const;

    std::string str() const;

private:
    void simplify();
    Expr num_, den_;
};

}  // namespace liesym
