#include "detgen.hpp"

#include <algorithm>
#include <map>

#include "reference_data.hpp"

namespace liesym {

namespace {

Expr jet(int nx, int ny) { return atom_expr(Atom::jet(nx, ny)); }

// Components must be free of generator symbols, f1/f2 must be point
// functions, and f3/g may depend on u1 but on no other jet.
void validate_system(const PdeSystem& s) {
    auto check = [](const Expr& e, bool u1_ok, const char* which) {
        if (contains_kind(e, Atom::Kind::fn))
            throw KernelError(std::string("system component ") + which + " mentions a generator symbol");
        for (const Atom& a : atoms_of_kind(e, Atom::Kind::jet))
            if (!u1_ok || a.nx() != 1 || a.ny() != 0)
                throw KernelError(std::string("system component ") + which + " depends on the jet " + a.name());
    };
    check(s.f1, false, "f1");
    check(s.f2, false, "f2");
    check(s.f3, true, "f3");
    check(s.g, true, "g");
    if (s.f2.is_zero()) throw DegenerateError("the u1^2 coefficient of the flux vanishes identically");
}

}  // namespace

PdeSystem symbolic_system() {
    return {atom_expr(Atom::rhs(Rhs::F1)), atom_expr(Atom::rhs(Rhs::F2)),
            atom_expr(Atom::rhs(Rhs::F3)), atom_expr(Atom::rhs(Rhs::G))};
}

PdeSystem model_system() {
    return {Expr(), Expr::constant(1), Expr(), Expr()};
}

Expr flux_expr(const PdeSystem& s) {
    Expr u1 = jet(1, 0);
    return s.f1 * u1 + s.f2 * u1.pow(2) + s.f3 * u1.pow(3);
}

std::vector<std::pair<Atom, Expr>> on_shell_bindings(const PdeSystem& s) {
    validate_system(s);
    Expr f = flux_expr(s);
    Expr b_u12 = total_derivative(f, 0);
    Expr b_u112 = substitute_jets(total_derivative(b_u12, 0), {{Atom::jet(3, 0), s.g}});
    return {{Atom::jet(2, 1), b_u112},
            {Atom::jet(3, 0), s.g},
            {Atom::jet(1, 1), b_u12},
            {Atom::jet(0, 1), f}};
}

Expr invariance_condition(const PdeSystem& s, int cond) {
    validate_system(s);
    VectorField v = symbolic_vector_field();
    if (cond == 1) return apply_pr3(v, jet(0, 1) - flux_expr(s));
    if (cond == 2) return apply_pr3(v, jet(3, 0) - s.g);
    throw KernelError("invariance condition index must be 1 or 2");
}

std::vector<Stratum> on_shell_strata(const PdeSystem& s) {
    auto bindings = on_shell_bindings(s);
    std::vector<Stratum> out;
    for (int cond : {1, 2}) {
        Expr os = substitute_jets(invariance_condition(s, cond), bindings);
        for (const Atom& a : atoms_of_kind(os, Atom::Kind::jet))
            if (a.ny() != 0 || a.nx() > 2)
                throw KernelError("determined jet survived on-shell substitution: " + a.name());
        if (cond == 1 && contains_atom(os, Atom::jet(2, 0)))
            throw KernelError("first invariance condition retains u11 on shell");
        auto parts = collect(os, {Atom::jet(2, 0)});
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            out.push_back({cond, it->first[0], it->second});
    }
    return out;
}

namespace {

int max_symbol_order(const Expr& e) {
    int m = 0;
    for (Atom::Kind k : {Atom::Kind::fn, Atom::Kind::rhs})
        for (const Atom& a : atoms_of_kind(e, k)) m = std::max(m, a.order());
    return m;
}

// An equation proportional to a first or second partial derivative (in x,
// y, u) of another one adds nothing: determining equations hold as
// polynomial identities, so their derivatives vanish with them. The
// reference lists omit such rows; dropping them here reproduces that.
// Derivatives that would blow the symbol-order budget cannot match any
// pipeline output and are skipped.
void prune_consequences(std::vector<DeterminingEquation>& eqs) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t j = eqs.size(); j-- > 0;) {
            bool drop = false;
            for (size_t i = 0; i < eqs.size() && !drop; ++i) {
                if (i == j) continue;
                int room = kMaxFnOrder - max_symbol_order(eqs[i].lhs);
                for (int dx = 0; dx <= 2 && !drop; ++dx)
                    for (int dy = 0; dx + dy <= 2 && !drop; ++dy)
                        for (int du = dx + dy == 0 ? 1 : 0; dx + dy + du <= 2 && !drop; ++du) {
                            if (dx + dy + du > room) continue;
                            Expr d = pdiff_multi(eqs[i].lhs, dx, dy, du);
                            if (!d.is_zero() && proportional(d, eqs[j].lhs)) drop = true;
                        }
            }
            if (drop) {
                eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
            }
        }
    }
}

}  // namespace

DeterminingSystem determining_equations(const PdeSystem& s) {
    DeterminingSystem ds;
    ds.system = s;
    ds.strata = on_shell_strata(s);
    for (const Stratum& st : ds.strata) {
        for (const Atom& a : atoms_of_kind(st.lhs, Atom::Kind::rhs))
            if ((a.rhs_name() == Rhs::F3 || a.rhs_name() == Rhs::G) && !a.has_series_index())
                throw KernelError(
                    "u1 stratification needs a series expansion while " + a.name() +
                    " still depends on u1");
        for (const auto& [pows, coeff] : collect(st.lhs, {Atom::jet(1, 0)})) {
            if (contains_kind(coeff, Atom::Kind::jet))
                throw KernelError("stratification left a jet coordinate behind");
            DeterminingEquation eq;
            eq.lhs = scale_canonical(coeff);
            eq.origins.push_back({st.cond, st.u11_power, pows[0]});
            ds.raw.push_back(std::move(eq));
        }
    }
    std::map<Expr, size_t> seen;
    for (const DeterminingEquation& eq : ds.raw) {
        auto [it, inserted] = seen.emplace(eq.lhs, ds.equations.size());
        if (inserted)
            ds.equations.push_back(eq);
        else
            ds.equations[it->second].origins.push_back(eq.origins.front());
    }
    prune_consequences(ds.equations);
    return ds;
}

Expr substitute_generator(const Expr& e, const VectorField& v) {
    if (!is_concrete(v)) throw KernelError("generator substitution needs a concrete field");
    std::map<Atom, Expr> map;
    for (const Atom& a : atoms_of_kind(e, Atom::Kind::fn)) {
        const Expr& comp = a.fn_name() == Fn::xi ? v.xi : a.fn_name() == Fn::tau ? v.tau : v.phi;
        map.emplace(a, pdiff_multi(comp, a.nx(), a.ny(), a.nu()));
    }
    return substitute_atoms(e, map);
}

// --- transcription cross-check ----------------------------------------------

bool CrossCheckReport::all_ok() const {
    return std::all_of(items.begin(), items.end(), [](const CrossCheckItem& i) { return i.ok; });
}

namespace {

std::string diff_summary(const Expr& got, const Expr& want) {
    Expr d = got - want;
    std::string s = std::to_string(d.term_count()) + " differing term(s)";
    int shown = 0;
    for (const auto& [m, c] : d.terms()) {
        if (shown == 3) {
            s += ", ...";
            break;
        }
        Expr one;
        one.add_term(m, c);
        s += std::string(shown ? ", " : ": ") + to_string(one);
        ++shown;
    }
    return s;
}

CrossCheckItem exact_item(std::string label, const Expr& computed, const Expr& stored) {
    if (computed == stored) return {std::move(label), true, "exact match"};
    return {std::move(label), false, diff_summary(computed, stored)};
}

CrossCheckItem ratio_item(std::string label, const Expr& computed, const Expr& stored) {
    if (auto r = proportionality_ratio(stored, computed))
        return {std::move(label), true, "computed = " + rat_to_string(*r) + " * stored"};
    return {std::move(label), false,
            diff_summary(scale_canonical(computed), scale_canonical(stored)) +
                " after scale normalization"};
}

Rational coefficient_of(const Expr& e, Monomial m) {
    std::sort(m.begin(), m.end());
    auto it = e.terms().find(m);
    return it == e.terms().end() ? Rational(0) : it->second;
}

}  // namespace

CrossCheckReport cross_check() {
    CrossCheckReport rep;
    VectorField v = symbolic_vector_field();

    const struct {
        int jx, jy;
        const char* label;
        const char* stored;
    } brackets[] = {
        {1, 0, "prolongation coefficient, J = x", ref::kBracketPhiX},
        {0, 1, "prolongation coefficient, J = y", ref::kBracketPhiY},
        {2, 0, "prolongation coefficient, J = xx", ref::kBracketPhiXX},
        {1, 1, "prolongation coefficient, J = xy", ref::kBracketPhiXY},
        {3, 0, "prolongation coefficient, J = xxx", ref::kBracketPhiXXX},
    };
    for (const auto& b : brackets)
        rep.items.push_back(exact_item(b.label, prolong_coefficient(v, b.jx, b.jy),
                                       -ref::parse_ref(b.stored)));

    PdeSystem sym = symbolic_system();
    auto bindings = on_shell_bindings(sym);
    {
        Expr computed = bindings[0].second;
        Expr gap = atom_expr(Atom::rhs(Rhs::F1, 1, 0, 1)) * Expr::from_atom(Atom::jet(1, 0), 2);
        bool ok = computed == ref::parse_ref(ref::kBindingU112Corrected) &&
                  computed - ref::parse_ref(ref::kBindingU112) == gap;
        rep.items.push_back(
            {"on-shell binding for u112", ok,
             ok ? "matches the corrected form; the stored display is short one F1_xu*u1^2, as documented"
                : diff_summary(computed, ref::parse_ref(ref::kBindingU112Corrected))});
    }
    rep.items.push_back(exact_item("on-shell binding for u12", bindings[2].second,
                                   ref::parse_ref(ref::kBindingU12)));
    rep.items.push_back(exact_item("invariance condition 1, off shell",
                                   invariance_condition(sym, 1), ref::parse_ref(ref::kCond1Raw)));
    rep.items.push_back(exact_item("invariance condition 2, off shell",
                                   invariance_condition(sym, 2), ref::parse_ref(ref::kCond2Raw)));

    std::vector<Stratum> strata = on_shell_strata(sym);
    auto stratum = [&](int cond, int pow) -> const Expr& {
        for (const Stratum& st : strata)
            if (st.cond == cond && st.u11_power == pow) return st.lhs;
        throw KernelError("missing stratum in cross-check");
    };
    rep.items.push_back(
        ratio_item("condition 1 on shell", stratum(1, 0), ref::parse_ref(ref::kCond1OnShell)));
    rep.items.push_back(ratio_item("condition 2, u11^2 stratum", stratum(2, 2),
                                   ref::parse_ref(ref::kCond2StratumU11Sq)));
    rep.items.push_back(ratio_item("condition 2, u11^1 stratum", stratum(2, 1),
                                   ref::parse_ref(ref::kCond2StratumU11Lin)));
    rep.items.push_back(ratio_item("condition 2, u11^0 stratum", stratum(2, 0),
                                   ref::parse_ref(ref::kCond2StratumU11Free)));

    {
        auto parts = collect(stratum(1, 0), {Atom::jet(1, 0)});
        Expr lin = parts.count({1}) ? parts[{1}] : Expr();
        Rational a = coefficient_of(lin, {{Atom::fn(Fn::xi, 0, 1, 0), 1}});
        Rational b = coefficient_of(lin, {{Atom::fn(Fn::xi, 1, 0, 0), 1}, {Atom::rhs(Rhs::F1), 1}});
        bool ok = a == Rational(-1) && b == Rational(1);
        rep.items.push_back({"condition 1, u1 coefficient carries -xi_y and F1*xi_x", ok,
                             "coefficient of xi_y is " + rat_to_string(a) +
                                 ", of F1*xi_x is " + rat_to_string(b)});
    }

    rep.items.push_back(ratio_item("u11^2 stratum, u1-series coefficient 1",
                                   u1_series_coefficient(stratum(2, 2), 1),
                                   ref::parse_ref(ref::kSeriesRelationU11SqU1)));
    rep.items.push_back(ratio_item("u11^2 stratum, u1-series coefficient 0",
                                   u1_series_coefficient(stratum(2, 2), 0),
                                   ref::parse_ref(ref::kSeriesRelationU11SqU0)));

    DeterminingSystem model = determining_equations(model_system());
    rep.items.push_back({"model system, equation count",
                         model.equations.size() == 13,
                         std::to_string(model.equations.size()) + " equations"});
    {
        auto match = [&](const Expr& e) {
            for (size_t k = 0; k < model.equations.size(); ++k)
                if (proportional(e, model.equations[k].lhs)) return static_cast<int>(k);
            return -1;
        };
        std::vector<int> unmatched;
        std::vector<bool> covered(model.equations.size(), false);
        for (size_t i = 0; i < ref::kModelEquations.size(); ++i) {
            int k = match(ref::parse_ref(ref::kModelEquations[i]));
            if (k < 0)
                unmatched.push_back(static_cast<int>(i));
            else
                covered[static_cast<size_t>(k)] = true;
        }
        int corrected = match(ref::parse_ref(ref::kModelFlaggedCorrected));
        if (corrected >= 0) covered[static_cast<size_t>(corrected)] = true;
        bool flag_as_expected =
            unmatched.size() == 1 && unmatched[0] == ref::kModelFlaggedIndex && corrected >= 0;
        bool all_covered = std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
        std::string detail;
        if (flag_as_expected)
            detail = "entry " + std::to_string(ref::kModelFlaggedIndex) +
                     " of the stored list disagrees as documented; its corrected form matches";
        else {
            detail = "unmatched stored entries:";
            if (unmatched.empty()) detail += " none";
            for (int i : unmatched) detail += " " + std::to_string(i);
            if (corrected < 0) detail += "; corrected form matches nothing";
        }
        if (!all_covered) {
            detail += "; computed equations without a stored counterpart:";
            for (size_t k = 0; k < covered.size(); ++k)
                if (!covered[k]) detail += " " + std::to_string(k);
        }
        rep.items.push_back(
            {"model system, stored equation list", flag_as_expected && all_covered, detail});
    }
    return rep;
}

}  // namespace liesym
