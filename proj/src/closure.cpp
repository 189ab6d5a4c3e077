#include "closure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "prolong.hpp"

namespace liesym {

namespace {

// Elimination priority; larger keys are eliminated first, and the ten
// initial symbols are never pivots.
std::tuple<int, int, int, int> elim_key(const Atom& a) {
    return {a.order(), a.ny(), a.nu(), static_cast<int>(a.fn_name())};
}

const std::array<Atom, 10>& initial_ref() {
    static const std::array<Atom, 10> c = {
        Atom::fn(Fn::xi),          Atom::fn(Fn::tau),         Atom::fn(Fn::phi),
        Atom::fn(Fn::xi, 1),       Atom::fn(Fn::tau, 1),      Atom::fn(Fn::phi, 1),
        Atom::fn(Fn::phi, 0, 0, 1),
        Atom::fn(Fn::xi, 2),       Atom::fn(Fn::tau, 2),      Atom::fn(Fn::phi, 2)};
    return c;
}

// All 60 derivative symbols of order <= 3, ascending by elimination key.
std::vector<Atom> all_symbols() {
    std::vector<Atom> out;
    for (int dx = 0; dx <= 3; ++dx)
        for (int dy = 0; dx + dy <= 3; ++dy)
            for (int du = 0; dx + dy + du <= 3; ++du)
                for (Fn f : {Fn::xi, Fn::tau, Fn::phi}) out.push_back(Atom::fn(f, dx, dy, du));
    std::sort(out.begin(), out.end(),
              [](const Atom& a, const Atom& b) { return elim_key(a) < elim_key(b); });
    return out;
}

// Relations must stay linear over the fn symbols with coefficients that are
// plain polynomials in x, y, u.
void validate_relation(const Expr& e) {
    for (const auto& term : e.terms()) {
        int fns = 0;
        for (const auto& factor : term.first) {
            if (factor.first.is_fn())
                fns += factor.second;
            else if (!factor.first.is_base())
                throw KernelError("relation coefficient is not polynomial in x, y, u");
        }
        if (fns != 1) throw KernelError("relation is not linear in the generator symbols");
    }
}

Expr coeff_of(const Expr& e, const Atom& s) {
    Expr out;
    for (const auto& term : e.terms()) {
        Monomial rest;
        bool hit = false;
        for (const auto& factor : term.first) {
            if (factor.first == s)
                hit = true;
            else
                rest.push_back(factor);
        }
        if (hit) out.add_term(rest, term.second);
    }
    return out;
}

int max_fn_order(const Expr& e) {
    int m = 0;
    for (const Atom& a : atoms_of_kind(e, Atom::Kind::fn)) m = std::max(m, a.order());
    return m;
}

// The raw stratum relations closed under differentiation by x, y, u up to
// symbol order 3, deduplicated up to rational scale.
std::vector<Expr> relation_pot(const DeterminingSystem& ds) {
    std::vector<Expr> pot;
    std::set<Expr> seen;
    auto push = [&](const Expr& e) {
        if (e.is_zero()) return;
        Expr canon = scale_canonical(e);
        if (seen.insert(canon).second) pot.push_back(canon);
    };
    for (const auto& eq : ds.raw) {
        validate_relation(eq.lhs);
        push(eq.lhs);
    }
    size_t lo = 0;
    while (lo < pot.size()) {
        size_t hi = pot.size();
        for (size_t i = lo; i < hi; ++i) {
            if (max_fn_order(pot[i]) >= kBoundaryJetOrder) continue;
            for (const Atom& v : {Atom::x(), Atom::y(), Atom::u()}) push(pdiff(pot[i], v));
        }
        lo = hi;
    }
    return pot;
}

// Turns q*s + sum(p_t * t) = 0 into an entry s -> -(p_t/q) * (form of t),
// where every other t must be initial or already solved.
TableEntry isolate(const Expr& row, const Atom& s, const std::map<Atom, LinearForm>& solved) {
    const auto& c = initial_ref();
    Expr q = coeff_of(row, s);
    if (q.is_zero()) throw PivotVanishesError(s.name(), "0");
    RationalFn den{q};
    LinearForm form;
    for (const Atom& t : atoms_of_kind(row, Atom::Kind::fn)) {
        if (t == s) continue;
        RationalFn w = RationalFn(coeff_of(row, t)) / den;
        auto ci = std::find(c.begin(), c.end(), t);
        if (ci != c.end()) {
            size_t i = static_cast<size_t>(ci - c.begin());
            form.coeff[i] = form.coeff[i] - w;
        } else {
            auto it = solved.find(t);
            if (it == solved.end())
                throw KernelError("relation for " + s.name() + " references unsolved symbol " +
                                  t.name());
            for (size_t i = 0; i < form.coeff.size(); ++i)
                form.coeff[i] = form.coeff[i] - w * it->second.coeff[i];
        }
    }
    return {s, form, q};
}

// Prefer constant pivots, then sparse ones.
bool simpler(const Expr& a, const Expr& b) {
    if (a.is_constant() != b.is_constant()) return a.is_constant();
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    return a < b;
}

}  // namespace

std::array<Atom, 10> initial_coefficients() { return initial_ref(); }

bool is_initial_coefficient(const Atom& a) {
    const auto& c = initial_ref();
    return a.is_fn() && std::find(c.begin(), c.end(), a) != c.end();
}

bool LinearForm::is_zero() const {
    for (const auto& w : coeff)
        if (!w.is_zero()) return false;
    return true;
}

const TableEntry* ReductionTable::find(const Atom& symbol) const {
    for (const auto& e : entries)
        if (e.symbol == symbol) return &e;
    return nullptr;
}

std::vector<TableEntry> initial_relations(const DeterminingSystem& ds) {
    struct Step {
        Atom symbol;
        EquationOrigin origin;
    };
    // Each first-order symbol is pinned by one specific stratum coefficient:
    // tau_u by the linear u1 term of the u11^2 stratum, then tau_y, xi_u,
    // xi_y, phi_y by the low u1 coefficients of the two conditions.
    const Step steps[] = {
        {Atom::fn(Fn::tau, 0, 0, 1), {2, 2, 1}},
        {Atom::fn(Fn::tau, 0, 1, 0), {1, 0, 2}},
        {Atom::fn(Fn::xi, 0, 0, 1), {2, 2, 0}},
        {Atom::fn(Fn::xi, 0, 1, 0), {1, 0, 1}},
        {Atom::fn(Fn::phi, 0, 1, 0), {1, 0, 0}},
    };
    std::vector<TableEntry> out;
    std::map<Atom, LinearForm> solved;
    for (const auto& step : steps) {
        const Expr* row = nullptr;
        for (const auto& eq : ds.raw)
            for (const auto& o : eq.origins)
                if (o == step.origin) row = &eq.lhs;
        if (!row) throw PivotVanishesError(step.symbol.name(), "0");
        TableEntry entry = isolate(*row, step.symbol, solved);
        solved[step.symbol] = entry.form;
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<TableEntry> initial_relations(const PdeSystem& s) {
    return initial_relations(determining_equations(s));
}

ReductionTable complete_table(const DeterminingSystem& ds) {
    std::vector<TableEntry> paper_path = initial_relations(ds);

    std::vector<Expr> rows = relation_pot(ds);
    const std::vector<Atom> symbols = all_symbols();

    // Jordan elimination over the rational-function field, fraction-free on
    // polynomial rows, eliminating the highest non-initial symbol first.
    std::map<Atom, size_t> pivot_of;
    std::vector<bool> assigned(rows.size(), false);
    for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) {
        const Atom& s = *it;
        if (is_initial_coefficient(s)) continue;
        size_t best = rows.size();
        Expr bestc;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (assigned[i] || rows[i].is_zero()) continue;
            Expr c = coeff_of(rows[i], s);
            if (c.is_zero()) continue;
            if (best == rows.size() || simpler(c, bestc)) {
                best = i;
                bestc = c;
            }
        }
        if (best == rows.size()) continue;
        assigned[best] = true;
        pivot_of.emplace(s, best);
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j == best || rows[j].is_zero()) continue;
            Expr cj = coeff_of(rows[j], s);
            if (cj.is_zero()) continue;
            rows[j] = scale_canonical(bestc * rows[j] - cj * rows[best]);
        }
    }

    // A symbol is unreduced if it has no pivot row, or its pivot row still
    // mentions such a free symbol.
    std::set<Atom> free_syms;
    for (const Atom& s : symbols)
        if (!is_initial_coefficient(s) && !pivot_of.count(s)) free_syms.insert(s);
    std::set<Atom> bad = free_syms;
    for (const auto& entry : pivot_of)
        for (const Atom& t : atoms_of_kind(rows[entry.second], Atom::Kind::fn))
            if (free_syms.count(t)) {
                bad.insert(entry.first);
                break;
            }
    if (!bad.empty()) {
        std::vector<std::string> names;
        for (const Atom& s : symbols)
            if (bad.count(s)) names.push_back(s.name());
        throw IncompleteError(std::move(names));
    }

    ReductionTable table{initial_ref(), {}, {}, {}};
    const std::map<Atom, LinearForm> no_pending;
    for (const Atom& s : symbols) {
        auto ci = std::find(table.initial.begin(), table.initial.end(), s);
        if (ci != table.initial.end()) {
            LinearForm form;
            form.coeff[ci - table.initial.begin()] = RationalFn::constant(1);
            table.entries.push_back({s, form, Expr::constant(1)});
            continue;
        }
        TableEntry entry = isolate(rows[pivot_of.at(s)], s, no_pending);
        if (!entry.pivot.is_constant()) table.obligations.emplace_back(s, entry.pivot);
        table.entries.push_back(std::move(entry));
    }

    std::set<Expr> seen_constraints;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (assigned[i] || rows[i].is_zero()) continue;
        Expr canon = scale_canonical(rows[i]);
        if (seen_constraints.insert(canon).second) table.constraints.push_back(canon);
    }

    // With no constraints among the initial symbols, the expression of each
    // symbol over them is unique, so the dedicated first-order path must
    // reproduce the table exactly.
    if (table.constraints.empty()) {
        for (const auto& pe : paper_path) {
            const TableEntry* ge = table.find(pe.symbol);
            for (size_t i = 0; i < pe.form.coeff.size(); ++i)
                if (!ge->form.coeff[i].equals(pe.form.coeff[i]))
                    throw KernelError("first-order relation for " + pe.symbol.name() +
                                      " disagrees between the elimination paths");
        }
    }
    return table;
}

ReductionTable complete_table(const PdeSystem& s) { return complete_table(determining_equations(s)); }

bool ReconstructReport::all_ok() const {
    for (const auto& item : items)
        if (!item.ok) return false;
    return true;
}

ReconstructReport reconstruct_check(const PdeSystem& s, const VectorField& v,
                                    const std::array<Rational, 3>& point) {
    if (!is_concrete(v)) throw KernelError("reconstruction needs a concrete field");
    ReductionTable table = complete_table(s);
    const std::map<Atom, Rational> pt = {
        {Atom::x(), point[0]}, {Atom::y(), point[1]}, {Atom::u(), point[2]}};
    for (const auto& ob : table.obligations)
        if (eval(ob.second, pt) == 0)
            throw DegenerateError("pivot " + to_string(ob.second) + " for " + ob.first.name() +
                                  " vanishes at the evaluation point; choose a different point");

    auto comp = [&](Fn f) -> const Expr& {
        switch (f) {
            case Fn::xi: return v.xi;
            case Fn::tau: return v.tau;
            default: return v.phi;
        }
    };
    ReconstructReport rep;
    for (size_t i = 0; i < table.initial.size(); ++i) {
        const Atom& c = table.initial[i];
        rep.initial_values[i] = eval(pdiff_multi(comp(c.fn_name()), c.nx(), c.ny(), c.nu()), pt);
    }
    for (const auto& e : table.entries) {
        const Atom& sym = e.symbol;
        Rational direct =
            eval(pdiff_multi(comp(sym.fn_name()), sym.nx(), sym.ny(), sym.nu()), pt);
        Rational predicted(0);
        for (size_t i = 0; i < table.initial.size(); ++i)
            if (!e.form.coeff[i].is_zero())
                predicted += e.form.coeff[i].eval_at(pt) * rep.initial_values[i];
        rep.items.push_back({sym, direct, predicted, direct == predicted});
    }
    return rep;
}

}  // namespace liesym
