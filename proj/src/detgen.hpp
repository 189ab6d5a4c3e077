#pragma once

#include <string>
#include <vector>

#include "expr.hpp"
#include "prolong.hpp"
#include "system.hpp"

namespace liesym {

// The system with unexpanded right-hand sides: F1, F2, F3, G kept as symbols.
PdeSystem symbolic_system();

// The model system u_y = u1^2, u_xxx = 0.
PdeSystem model_system();

// u_y as a polynomial in u1: f1*u1 + f2*u1^2 + f3*u1^3.
Expr flux_expr(const PdeSystem& s);

// Substitutions eliminating the jets determined by the system, ordered
// highest first: u112, u111, u12, u2. Values involve x, y, u, u1, u11 only,
// so a single simultaneous pass is a fixpoint.
std::vector<std::pair<Atom, Expr>> on_shell_bindings(const PdeSystem& s);

// Action of the prolonged symbolic field on u2 - flux (cond 1) or
// u111 - g (cond 2), before any substitution.
Expr invariance_condition(const PdeSystem& s, int cond);

// Where an equation came from: which condition, and the u11/u1 powers whose
// coefficient produced it. u1_power is -1 for whole-stratum records.
struct EquationOrigin {
    int cond;
    int u11_power;
    int u1_power;
    bool operator==(const EquationOrigin& o) const = default;
};

// Coefficient of u11^u11_power in an on-shell invariance condition, kept in
// the scale the computation produced.
struct Stratum {
    int cond;
    int u11_power;
    Expr lhs;
};

struct DeterminingEquation {
    Expr lhs;                             // scale-canonical
    std::vector<EquationOrigin> origins;  // first entry is the primary origin
};

struct DeterminingSystem {
    PdeSystem system;
    std::vector<Stratum> strata;                 // cond asc, u11 power desc
    std::vector<DeterminingEquation> raw;        // every nonzero coefficient, unmerged
    std::vector<DeterminingEquation> equations;  // merged and pruned, display order
};

// On-shell substitution and u11 stratification. Works for the symbolic
// system as well as concrete ones; the first condition must come out free
// of u11 and no determined jet may survive.
std::vector<Stratum> on_shell_strata(const PdeSystem& s);

// Full pipeline: strata, u1 stratification, scale canonicalization,
// duplicate merging, and pruning of derivative consequences. The u1 split
// requires every surviving right-hand-side symbol to be independent of u1,
// so systems carrying unexpanded F3 or G symbols are rejected.
DeterminingSystem determining_equations(const PdeSystem& s);

// Replaces each generator derivative symbol by the matching partial
// derivative of the concrete field v. An expression that vanishes under
// this substitution for every determining equation witnesses v as a
// symmetry of the system.
Expr substitute_generator(const Expr& e, const VectorField& v);

// --- transcription cross-check ----------------------------------------------

struct CrossCheckItem {
    std::string label;
    bool ok;
    std::string detail;
};

struct CrossCheckReport {
    std::vector<CrossCheckItem> items;
    bool all_ok() const;
};

// Compares the generated objects against the frozen reference forms: the
// five prolongation coefficients, the on-shell bindings, both invariance
// conditions, the four on-shell strata (with their stored-vs-computed
// scale ratios), two series spot values, and the model-system equation
// list including its one known discrepant entry. Reporting only; nothing
// is corrected.
CrossCheckReport cross_check();

}  // namespace liesym
