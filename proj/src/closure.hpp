#pragma once

#include <array>
#include <vector>

#include "detgen.hpp"
#include "expr.hpp"
#include "system.hpp"

namespace liesym {

// The ten initial data symbols that determine an infinitesimal symmetry:
// (xi, tau, phi, xi_x, tau_x, phi_x, phi_u, xi_xx, tau_xx, phi_xx).
std::array<Atom, 10> initial_coefficients();
bool is_initial_coefficient(const Atom& a);

// Linear form over the initial coefficients with rational-function weights
// in (x, y, u).
struct LinearForm {
    std::array<RationalFn, 10> coeff;
    bool is_zero() const;
};

struct TableEntry {
    Atom symbol;
    LinearForm form;
    Expr pivot;  // divisor used to isolate the symbol; constant 1 when trivial
};

// Every derivative symbol of xi/tau/phi up to order 3 expressed over the
// initial coefficients. The ten initial symbols map to themselves.
struct ReductionTable {
    std::array<Atom, 10> initial;
    std::vector<TableEntry> entries;  // ascending by (order, y-count, u-count, fn)
    std::vector<std::pair<Atom, Expr>> obligations;  // non-constant pivots, nonzero as polynomials
    std::vector<Expr> constraints;  // surviving relations among the initial symbols alone

    const TableEntry* find(const Atom& symbol) const;
};

// The five first-order eliminations in fixed order tau_u, tau_y, xi_u,
// xi_y, phi_y, each isolated from the specific stratum coefficient that
// pins it down. Throws PivotVanishesError when an isolating divisor is
// identically zero.
std::vector<TableEntry> initial_relations(const DeterminingSystem& ds);
std::vector<TableEntry> initial_relations(const PdeSystem& s);

// Completes the table for all 60 symbols of order <= 3 by closing the
// stratum relations under x/y/u-differentiation and eliminating non-initial
// symbols, highest first. Throws IncompleteError listing any symbol that
// cannot be expressed over the initial coefficients.
ReductionTable complete_table(const DeterminingSystem& ds);
ReductionTable complete_table(const PdeSystem& s);

struct ReconstructItem {
    Atom symbol;
    Rational direct;     // the derivative of the field component, evaluated
    Rational predicted;  // the table's linear form, evaluated
    bool ok = false;
};

struct ReconstructReport {
    std::array<Rational, 10> initial_values;
    std::vector<ReconstructItem> items;
    bool all_ok() const;
};

// Evaluates the ten initial coefficients of the field at the point, then
// compares every order <= 3 derivative of the components against the
// table's prediction. The field should satisfy the determining equations
// for the comparisons to come out equal. Throws DegenerateError when a
// recorded pivot vanishes at the point (pick a different point).
ReconstructReport reconstruct_check(const PdeSystem& s, const VectorField& v,
                                    const std::array<Rational, 3>& point);

}  // namespace liesym
