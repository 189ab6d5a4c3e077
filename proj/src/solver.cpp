#include "solver.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace liesym {

namespace {

long falling(int n, int k) {
    long out = 1;
    for (int t = 0; t < k; ++t) out *= n - t;
    return out;
}

Monomial base_monomial(int i, int j, int k) {
    Monomial m;
    if (i) m.push_back({Atom::x(), i});
    if (j) m.push_back({Atom::y(), j});
    if (k) m.push_back({Atom::u(), k});
    return m;
}

}  // namespace

LinearSystem build_linear_system(const DeterminingSystem& ds, int degree) {
    if (degree < 1) throw KernelError("ansatz degree must be at least 1");
    LinearSystem ls;
    for (Fn f : {Fn::xi, Fn::tau, Fn::phi})
        for (int i = 0; i <= degree; ++i)
            for (int j = 0; i + j <= degree; ++j)
                for (int k = 0; i + j + k <= degree; ++k) ls.columns.push_back({f, i, j, k});
    const size_t n = ls.columns.size();

    for (const DeterminingEquation& eq : ds.equations) {
        std::map<Monomial, std::vector<Rational>, MonomialLess> rows;
        for (const auto& [mono, coef] : eq.lhs.terms()) {
            const Atom* fa = nullptr;
            Monomial base;
            for (const auto& [a, e] : mono) {
                if (a.is_fn()) {
                    if (fa || e != 1)
                        throw KernelError("determining equation is not linear in the generator");
                    fa = &a;
                } else {
                    base.push_back({a, e});
                }
            }
            if (!fa) throw KernelError("determining equation has a generator-free term");
            for (size_t c = 0; c < n; ++c) {
                const AnsatzColumn& col = ls.columns[c];
                if (col.fn != fa->fn_name()) continue;
                if (col.i < fa->nx() || col.j < fa->ny() || col.k < fa->nu()) continue;
                long scale = falling(col.i, fa->nx()) * falling(col.j, fa->ny()) *
                             falling(col.k, fa->nu());
                Monomial key = monomial_mul(
                    base, base_monomial(col.i - fa->nx(), col.j - fa->ny(), col.k - fa->nu()));
                auto& vec = rows[key];
                if (vec.empty()) vec.assign(n, Rational(0));
                vec[c] += coef * Rational(scale);
            }
        }
        for (auto& [key, vec] : rows) {
            (void)key;
            bool nonzero = std::any_of(vec.begin(), vec.end(),
                                       [](const Rational& r) { return r != 0; });
            if (nonzero) ls.rows.push_back(std::move(vec));
        }
    }
    return ls;
}

namespace {

size_t bit_size(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

std::vector<mpz_class> integer_row(const std::vector<Rational>& row) {
    mpz_class l(1);
    for (const Rational& r : row) l = lcm(l, r.get_den());
    std::vector<mpz_class> out(row.size());
    mpz_class g(0);
    for (size_t c = 0; c < row.size(); ++c) {
        out[c] = Rational(row[c] * Rational(l)).get_num();
        g = gcd(g, out[c]);
    }
    if (g > 1)
        for (mpz_class& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
}

struct Echelon {
    std::vector<std::vector<mpz_class>> rows;  // retired pivot rows, pivot order
    std::vector<size_t> pivot_cols;
};

// Fraction-free single-step elimination: each update divides exactly by
// the previous pivot, keeping entries at determinant size.
Echelon echelonize(std::vector<std::vector<mpz_class>> m) {
    Echelon e;
    const size_t ncols = m.empty() ? 0 : m[0].size();
    std::vector<char> col_used(ncols, 0), row_done(m.size(), 0);
    for (size_t r = 0; r < m.size(); ++r)
        if (std::all_of(m[r].begin(), m[r].end(), [](const mpz_class& v) { return v == 0; }))
            row_done[r] = 1;
    mpz_class prev(1);
    while (true) {
        size_t br = m.size(), bc = ncols, bbits = 0;
        for (size_t r = 0; r < m.size(); ++r) {
            if (row_done[r]) continue;
            for (size_t c = 0; c < ncols; ++c) {
                if (col_used[c] || m[r][c] == 0) continue;
                size_t b = bit_size(m[r][c]);
                if (br == m.size() || std::tuple(b, c, r) < std::tuple(bbits, bc, br)) {
                    bbits = b;
                    br = r;
                    bc = c;
                }
            }
        }
        if (br == m.size()) break;
        const mpz_class p = m[br][bc];
        row_done[br] = 1;
        col_used[bc] = 1;
        for (size_t r = 0; r < m.size(); ++r) {
            if (row_done[r]) continue;
            const mpz_class f = m[r][bc];
            bool nonzero = false;
            for (size_t c = 0; c < ncols; ++c) {
                mpz_class t = p * m[r][c] - f * m[br][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = std::move(t);
                if (m[r][c] != 0) nonzero = true;
            }
            if (!nonzero) row_done[r] = 1;
        }
        e.rows.push_back(std::move(m[br]));
        e.pivot_cols.push_back(bc);
        prev = p;
    }
    return e;
}

Echelon echelonize_rational(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<mpz_class>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) m.push_back(integer_row(row));
    return echelonize(std::move(m));
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const LinearSystem& ls) {
    const size_t n = ls.columns.size();
    Echelon e = echelonize_rational(ls.rows);
    std::vector<char> is_pivot(n, 0);
    for (size_t c : e.pivot_cols) is_pivot[c] = 1;
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[f] = 1;
        // row k is clean at earlier pivot columns, so a single bottom-up
        // sweep resolves each pivot coordinate
        for (size_t k = e.rows.size(); k-- > 0;) {
            const auto& row = e.rows[k];
            const size_t pc = e.pivot_cols[k];
            Rational s(0);
            for (size_t c = 0; c < n; ++c)
                if (c != pc && row[c] != 0 && v[c] != 0) s += Rational(row[c]) * v[c];
            v[pc] = -s / Rational(row[pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t matrix_rank(const std::vector<std::vector<Rational>>& rows) {
    return echelonize_rational(rows).pivot_cols.size();
}

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
    size_t base = matrix_rank(basis);
    std::vector<std::vector<Rational>> stacked = basis;
    stacked.push_back(v);
    return matrix_rank(stacked) == base;
}

std::vector<Rational> field_coordinates(const VectorField& v,
                                        const std::vector<AnsatzColumn>& columns) {
    std::map<std::tuple<int, int, int, int>, size_t> index;
    for (size_t c = 0; c < columns.size(); ++c)
        index[{static_cast<int>(columns[c].fn), columns[c].i, columns[c].j, columns[c].k}] = c;
    std::vector<Rational> out(columns.size(), Rational(0));
    const Expr* comps[3] = {&v.xi, &v.tau, &v.phi};
    for (int f = 0; f < 3; ++f) {
        for (const auto& [mono, coef] : comps[f]->terms()) {
            int e[3] = {0, 0, 0};
            for (const auto& [a, k] : mono) {
                if (!a.is_base()) throw KernelError("field component is not a point polynomial");
                e[a.base_index()] = k;
            }
            auto it = index.find({f, e[0], e[1], e[2]});
            if (it == index.end())
                throw KernelError("field component degree exceeds the ansatz columns");
            out[it->second] = coef;
        }
    }
    return out;
}

VectorField field_from_coordinates(const std::vector<AnsatzColumn>& columns,
                                   const std::vector<Rational>& coeffs) {
    if (columns.size() != coeffs.size()) throw KernelError("coefficient count mismatch");
    VectorField v;
    for (size_t c = 0; c < columns.size(); ++c) {
        if (coeffs[c] == 0) continue;
        const AnsatzColumn& col = columns[c];
        Monomial m = base_monomial(col.i, col.j, col.k);
        Expr term;
        term.add_term(m, coeffs[c]);
        (col.fn == Fn::xi ? v.xi : col.fn == Fn::tau ? v.tau : v.phi) += term;
    }
    return v;
}

SolveResult symmetry_basis(const PdeSystem& s, int degree) {
    SolveResult res;
    res.detsys = determining_equations(s);
    res.system = build_linear_system(res.detsys, degree);
    res.kernel = nullspace(res.system);
    for (const auto& v : res.kernel) {
        VectorField f = field_from_coordinates(res.system.columns, v);
        for (const auto& eq : res.detsys.equations)
            if (!substitute_generator(eq.lhs, f).is_zero())
                throw KernelError("kernel field fails re-substitution into the determining system");
        res.fields.push_back(std::move(f));
    }
    return res;
}

}  // namespace liesym
