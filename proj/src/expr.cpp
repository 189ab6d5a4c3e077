#include "expr.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace liesym {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) return true;
        if (b[j].first < a[i].first) return false;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    return i < a.size();
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e > kMaxExponent) throw BudgetError("exponent overflow beyond bound 64");
            out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0;
    for (const auto& [atom, exp] : b) {
        while (i < a.size() && a[i].first < atom) out.push_back(a[i++]);
        if (i == a.size() || !(a[i].first == atom) || a[i].second < exp) return std::nullopt;
        if (a[i].second > exp) out.emplace_back(atom, a[i].second - exp);
        ++i;
    }
    while (i < a.size()) out.push_back(a[i++]);
    return out;
}

Expr Expr::constant(const Rational& c) {
    Expr e;
    if (c != 0) e.terms_.emplace(Monomial{}, c);
    return e;
}

Expr Expr::from_atom(const Atom& a, int exp) {
    if (exp < 0) throw KernelError("negative exponent");
    if (exp > kMaxExponent) throw BudgetError("exponent overflow beyond bound 64");
    if (exp == 0) return constant(1);
    Expr e;
    e.terms_.emplace(Monomial{{a, exp}}, Rational(1));
    return e;
}

Rational Expr::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw KernelError("constant_value on non-constant expression");
    return terms_.begin()->second;
}

void Expr::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Expr Expr::operator-() const {
    Expr out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Expr& Expr::operator+=(const Expr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Expr& Expr::operator-=(const Expr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
    Expr out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
    return out;
}

Expr operator*(const Rational& c, Expr e) {
    if (c == 0) return Expr();
    for (auto& [m, coeff] : e.terms_) coeff *= c;
    return e;
}

Expr Expr::pow(int k) const {
    if (k < 0) throw KernelError("negative exponent");
    if (k > kMaxExponent) throw BudgetError("exponent overflow beyond bound 64");
    Expr result = Expr::constant(1);
    for (int i = 0; i < k; ++i) result = result * *this;
    return result;
}

bool Expr::operator<(const Expr& o) const {
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    MonomialLess less;
    for (; i != terms_.end() && j != o.terms_.end(); ++i, ++j) {
        if (less(i->first, j->first)) return true;
        if (less(j->first, i->first)) return false;
        int c = cmp(i->second, j->second);
        if (c != 0) return c < 0;
    }
    return i == terms_.end() && j != o.terms_.end();
}

// --- calculus ---------------------------------------------------------------

namespace {

// Derivative of a single atom by v (a base variable or jet coordinate),
// as an expression: 0, 1, or a shifted symbol.
Expr atom_pdiff(const Atom& a, const Atom& v) {
    if (v.is_base()) {
        int slot = v.base_index();
        switch (a.kind()) {
            case Atom::Kind::base:
                return a == v ? Expr::constant(1) : Expr();
            case Atom::Kind::jet:
                return Expr();
            case Atom::Kind::fn:
                return atom_expr(a.derived(slot));
            case Atom::Kind::rhs:
                return atom_expr(a.derived(slot));
        }
    }
    if (v.is_jet()) {
        if (a == v) return Expr::constant(1);
        if (a.is_rhs() && v.nx() == 1 && v.ny() == 0 && !a.has_series_index() &&
            (a.rhs_name() == Rhs::F3 || a.rhs_name() == Rhs::G))
            return atom_expr(a.derived(3));
        return Expr();
    }
    throw KernelError("pdiff by a non-variable atom");
}

// Product rule over the factors of each monomial, with datom supplied per
// atom kind. Shared by pdiff and the total derivatives.
Expr derive_terms(const Expr& e, const std::function<Expr(const Atom&)>& datom) {
    Expr out;
    for (const auto& [m, c] : e.terms()) {
        for (size_t k = 0; k < m.size(); ++k) {
            Expr d = datom(m[k].first);
            if (d.is_zero()) continue;
            Monomial rest;
            rest.reserve(m.size());
            for (size_t t = 0; t < m.size(); ++t) {
                if (t == k) {
                    if (m[t].second > 1) rest.emplace_back(m[t].first, m[t].second - 1);
                } else {
                    rest.push_back(m[t]);
                }
            }
            Expr partial;
            partial.add_term(rest, c * m[k].second);
            out += partial * d;
        }
    }
    return out;
}

}  // namespace

Expr pdiff(const Expr& e, const Atom& v) {
    return derive_terms(e, [&](const Atom& a) { return atom_pdiff(a, v); });
}

Expr pdiff_multi(const Expr& e, int dx, int dy, int du) {
    Expr out = e;
    for (int i = 0; i < dx; ++i) out = pdiff(out, Atom::x());
    for (int i = 0; i < dy; ++i) out = pdiff(out, Atom::y());
    for (int i = 0; i < du; ++i) out = pdiff(out, Atom::u());
    return out;
}

Expr total_derivative(const Expr& e, int dir) {
    if (dir != 0 && dir != 1) throw KernelError("total derivative direction must be 0 or 1");
    if (max_jet_order(e) >= kMaxJetOrder)
        throw BudgetError("jet order budget exhausted: input already contains order-4 jets");
    const Expr u_dir = atom_expr(Atom::jet(dir == 0 ? 1 : 0, dir == 0 ? 0 : 1));
    const Expr u1_dir = atom_expr(Atom::jet(dir == 0 ? 2 : 1, dir == 0 ? 0 : 1));
    return derive_terms(e, [&](const Atom& a) -> Expr {
        switch (a.kind()) {
            case Atom::Kind::base:
                if (a.base_index() == 2) return u_dir;
                return a.base_index() == dir ? Expr::constant(1) : Expr();
            case Atom::Kind::jet:
                return atom_expr(a.derived(dir));
            case Atom::Kind::fn:
                return atom_expr(a.derived(dir)) + u_dir * atom_expr(a.derived(2));
            case Atom::Kind::rhs: {
                Expr d = atom_expr(a.derived(dir)) + u_dir * atom_expr(a.derived(2));
                if (!a.has_series_index() && (a.rhs_name() == Rhs::F3 || a.rhs_name() == Rhs::G))
                    d += u1_dir * atom_expr(a.derived(3));
                return d;
            }
        }
        throw KernelError("unreachable");
    });
}

Expr substitute_atoms(const Expr& e, const std::map<Atom, Expr>& bindings) {
    Expr out;
    for (const auto& [m, c] : e.terms()) {
        Expr term = Expr::constant(c);
        Monomial kept;
        for (const auto& [atom, exp] : m) {
            auto it = bindings.find(atom);
            if (it == bindings.end()) {
                kept.emplace_back(atom, exp);
            } else {
                term = term * it->second.pow(exp);
            }
        }
        Expr kept_expr;
        kept_expr.add_term(kept, Rational(1));
        out += term * kept_expr;
    }
    return out;
}

Expr substitute_jets(const Expr& e, const std::vector<std::pair<Atom, Expr>>& bindings) {
    for (const auto& [k, v] : bindings) {
        if (!k.is_jet()) throw KernelError("substitute binds jet coordinates only");
        if (contains_atom(v, k))
            throw Error("cyclic bindings: value of " + k.name() + " mentions the key itself");
    }
    auto ordered = bindings;
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.order() != b.first.order()) return a.first.order() > b.first.order();
        return a.first.ny() > b.first.ny();
    });
    Expr out = e;
    for (const auto& [k, v] : ordered) out = substitute_atoms(out, {{k, v}});
    for (const auto& [k, v] : ordered)
        if (contains_atom(out, k))
            throw Error("cyclic bindings: " + k.name() + " survives one ordered pass");
    return out;
}

std::map<std::vector<int>, Expr> collect(const Expr& e, const std::vector<Atom>& vars) {
    std::map<std::vector<int>, Expr> out;
    for (const auto& [m, c] : e.terms()) {
        std::vector<int> exps(vars.size(), 0);
        Monomial rest;
        for (const auto& [atom, exp] : m) {
            auto it = std::find(vars.begin(), vars.end(), atom);
            if (it != vars.end())
                exps[static_cast<size_t>(it - vars.begin())] = exp;
            else
                rest.emplace_back(atom, exp);
        }
        out[exps].add_term(rest, c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

namespace {
Rational rat_pow(const Rational& r, int k) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(d.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(k));
    return rat_of(n, d);
}
}  // namespace

Rational eval(const Expr& e, const std::map<Atom, Rational>& point) {
    Rational sum(0);
    for (const auto& [m, c] : e.terms()) {
        Rational prod = c;
        for (const auto& [atom, exp] : m) {
            auto it = point.find(atom);
            if (it == point.end()) throw Error("unbound atom in eval: " + atom.name());
            prod *= rat_pow(it->second, exp);
        }
        sum += prod;
    }
    return sum;
}

Expr series_expand(const Expr& e, int N) {
    std::map<Atom, Expr> bindings;
    for (const auto& [m, c] : e.terms()) {
        for (const auto& [atom, exp] : m) {
            if (!atom.is_rhs() || atom.has_series_index()) continue;
            if (atom.rhs_name() != Rhs::F3 && atom.rhs_name() != Rhs::G) continue;
            if (bindings.count(atom)) continue;
            int m_u1 = atom.nu1();
            Expr series;
            for (int i = m_u1; i <= N; ++i) {
                Rational falling(1);
                for (int t = 0; t < m_u1; ++t) falling *= (i - t);
                Atom coeff = Atom::rhs_series(atom.rhs_name(), i, atom.nx(), atom.ny(), atom.nu());
                series += falling * (atom_expr(coeff) * atom_expr(Atom::jet(1, 0)).pow(i - m_u1));
            }
            bindings.emplace(atom, series);
        }
    }
    return substitute_atoms(e, bindings);
}

Expr u1_series_coefficient(const Expr& e, int k) {
    Expr expanded = series_expand(e, k + kMaxFnOrder);
    auto parts = collect(expanded, {Atom::jet(1, 0)});
    auto it = parts.find(std::vector<int>{k});
    return it == parts.end() ? Expr() : it->second;
}

// --- polynomial utilities -----------------------------------------------------

std::optional<Expr> divide_exact(const Expr& a, const Expr& b) {
    if (b.is_zero()) throw KernelError("division by zero polynomial");
    Expr rem = a;
    Expr quot;
    const auto& [lb, cb] = *b.terms().begin();
    while (!rem.is_zero()) {
        const auto& [lr, cr] = *rem.terms().begin();
        auto t = monomial_div(lr, lb);
        if (!t) return std::nullopt;
        Rational ct = cr / cb;
        Expr step;
        step.add_term(*t, ct);
        quot += step;
        rem -= step * b;
    }
    return quot;
}

Expr scale_canonical(const Expr& e) {
    if (e.is_zero()) return e;
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& [m, c] : e.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [m, c] : e.terms()) {
        mpz_class scaled = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale = rat_of(lcm_den, gcd_num);
    if (e.terms().begin()->second < 0) scale = -scale;
    return scale * e;
}

std::optional<Rational> proportionality_ratio(const Expr& a, const Expr& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.term_count() != b.term_count()) return std::nullopt;
    auto i = a.terms().begin();
    auto j = b.terms().begin();
    Rational ratio = j->second / i->second;
    for (; i != a.terms().end(); ++i, ++j) {
        if (i->first != j->first) return std::nullopt;
        if (j->second != ratio * i->second) return std::nullopt;
    }
    return ratio;
}

bool proportional(const Expr& a, const Expr& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return proportionality_ratio(a, b).has_value();
}

int max_jet_order(const Expr& e) {
    int best = 0;
    for (const auto& [m, c] : e.terms())
        for (const auto& [atom, exp] : m)
            if (atom.is_jet()) best = std::max(best, atom.order());
    return best;
}

bool contains_atom(const Expr& e, const Atom& a) {
    for (const auto& [m, c] : e.terms())
        for (const auto& [atom, exp] : m)
            if (atom == a) return true;
    return false;
}

bool contains_kind(const Expr& e, Atom::Kind k) {
    for (const auto& [m, c] : e.terms())
        for (const auto& [atom, exp] : m)
            if (atom.kind() == k) return true;
    return false;
}

std::vector<Atom> atoms_of_kind(const Expr& e, Atom::Kind k) {
    std::vector<Atom> out;
    for (const auto& [m, c] : e.terms())
        for (const auto& [atom, exp] : m)
            if (atom.kind() == k && std::find(out.begin(), out.end(), atom) == out.end())
                out.push_back(atom);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
// Factors print coefficient-functions-first, variables last (F2*tau_u,
// xi_u*u11^2, 2*y*u), while the internal monomial stays in atom order.
int display_class(const Atom& a) {
    switch (a.kind()) {
        case Atom::Kind::rhs: return 0;
        case Atom::Kind::fn: return 1;
        case Atom::Kind::base: return 2;
        case Atom::Kind::jet: return 3;
    }
    return 4;
}
}  // namespace

std::string to_string(const Expr& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Monomial shown = m;
        std::stable_sort(shown.begin(), shown.end(), [](const auto& p, const auto& q) {
            int cp = display_class(p.first), cq = display_class(q.first);
            if (cp != cq) return cp < cq;
            return p.first < q.first;
        });
        bool printed = false;
        if (a != 1 || shown.empty()) {
            os << rat_to_string(a);
            printed = true;
        }
        for (const auto& [atom, exp] : shown) {
            if (printed) os << "*";
            os << atom.name();
            if (exp > 1) os << "^" << exp;
            printed = true;
        }
    }
    return os.str();
}

// --- rational functions -------------------------------------------------------

RationalFn::RationalFn(Expr n, Expr d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw KernelError("rational function with zero denominator");
    simplify();
}

void RationalFn::simplify() {
    if (num_.is_zero()) {
        den_ = Expr::constant(1);
        return;
    }
    Expr den_c = scale_canonical(den_);
    auto r = proportionality_ratio(den_c, den_);
    num_ = (Rational(1) / *r) * num_;
    den_ = den_c;
    if (den_.is_constant()) {
        num_ = (Rational(1) / den_.constant_value()) * num_;
        den_ = Expr::constant(1);
        return;
    }
    if (auto q = divide_exact(num_, den_)) {
        num_ = *q;
        den_ = Expr::constant(1);
        return;
    }
    // strip a common monomial factor, e.g. (x*u)/(x*y) -> u/y
    auto common = [](const Expr& e) {
        Monomial g = e.terms().begin()->first;
        for (const auto& [m, c] : e.terms()) {
            Monomial next;
            size_t i = 0;
            for (const auto& [atom, exp] : g) {
                while (i < m.size() && m[i].first < atom) ++i;
                if (i < m.size() && m[i].first == atom)
                    next.emplace_back(atom, std::min(exp, m[i].second));
            }
            g = next;
            if (g.empty()) break;
        }
        return g;
    };
    Monomial gn = common(num_), gd = common(den_);
    Monomial g;
    {
        size_t i = 0;
        for (const auto& [atom, exp] : gn) {
            while (i < gd.size() && gd[i].first < atom) ++i;
            if (i < gd.size() && gd[i].first == atom) g.emplace_back(atom, std::min(exp, gd[i].second));
        }
    }
    if (!g.empty()) {
        Expr n2, d2;
        for (const auto& [m, c] : num_.terms()) n2.add_term(*monomial_div(m, g), c);
        for (const auto& [m, c] : den_.terms()) d2.add_term(*monomial_div(m, g), c);
        num_ = n2;
        den_ = d2;
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    if (den_ == o.den_) return RationalFn(num_ + o.num_, den_);
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.num_.is_zero()) throw KernelError("division by zero rational function");
    return RationalFn(num_ * o.den_, den_ * o.num_);
}

bool RationalFn::equals(const RationalFn& o) const { return num_ * o.den_ == o.num_ * den_; }

Rational RationalFn::eval_at(const std::map<Atom, Rational>& point) const {
    Rational d = eval(den_, point);
    if (d == 0) throw Error("denominator vanishes at evaluation point: " + to_string(den_));
    return eval(num_, point) / d;
}

std::string RationalFn::str() const {
    if (den_ == Expr::constant(1)) return to_string(num_);
    return "(" + to_string(num_) + ")/(" + to_string(den_) + ")";
}

}  // namespace liesym
