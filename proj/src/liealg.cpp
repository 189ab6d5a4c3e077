#include "liealg.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

#include "prolong.hpp"
#include "solver.hpp"

namespace liesym {

namespace {

const Expr& component(const VectorField& f, int i) {
    switch (i) {
        case 0: return f.xi;
        case 1: return f.tau;
        default: return f.phi;
    }
}

void require_concrete(const VectorField& f, const char* role) {
    if (!is_concrete(f))
        throw KernelError(std::string(role) + " must have polynomial components in x, y, u");
}

Expr apply_as_derivation(const VectorField& v, const Expr& h) {
    return v.xi * pdiff(h, Atom::x()) + v.tau * pdiff(h, Atom::y()) + v.phi * pdiff(h, Atom::u());
}

// Shared coordinate space for a family of fields: per component, the
// MonomialLess-ordered union of monomials, components in xi, tau, phi order.
using CoordSpace = std::array<std::vector<Monomial>, 3>;

CoordSpace coordinate_space(const std::vector<const VectorField*>& fields) {
    std::array<std::map<Monomial, char, MonomialLess>, 3> seen;
    for (const VectorField* f : fields)
        for (int i = 0; i < 3; ++i)
            for (const auto& term : component(*f, i).terms()) seen[i].emplace(term.first, 0);
    CoordSpace space;
    for (int i = 0; i < 3; ++i)
        for (const auto& entry : seen[i]) space[i].push_back(entry.first);
    return space;
}

std::vector<Rational> coordinates_in(const VectorField& f, const CoordSpace& space) {
    std::vector<Rational> out;
    for (int i = 0; i < 3; ++i) {
        const auto& terms = component(f, i).terms();
        for (const Monomial& mono : space[i]) {
            auto it = terms.find(mono);
            out.push_back(it == terms.end() ? Rational(0) : it->second);
        }
    }
    return out;
}

struct ExactSolve {
    bool consistent = false;
    std::vector<Rational> coeffs;  // consistent part even when !consistent
};

// Solves sum_k coeffs[k] * cols[k] = target by rational Gauss-Jordan on the
// augmented matrix. With independent columns the solution is unique; free
// columns (dependent input) are pinned to zero.
ExactSolve solve_exact(const std::vector<std::vector<Rational>>& cols,
                       const std::vector<Rational>& target) {
    size_t n = cols.size(), m = target.size();
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(n + 1));
    for (size_t r = 0; r < m; ++r) {
        for (size_t k = 0; k < n; ++k) aug[r][k] = cols[k][r];
        aug[r][n] = target[r];
    }
    ExactSolve out;
    out.coeffs.assign(n, Rational(0));
    size_t next = 0;
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    for (size_t c = 0; c < n && next < m; ++c) {
        size_t p = next;
        while (p < m && aug[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(aug[next], aug[p]);
        Rational inv = Rational(1) / aug[next][c];
        for (size_t cc = c; cc <= n; ++cc) aug[next][cc] *= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == next || aug[r][c] == 0) continue;
            Rational f = aug[r][c];
            for (size_t cc = c; cc <= n; ++cc) aug[r][cc] -= f * aug[next][cc];
        }
        pivots.emplace_back(next, c);
        ++next;
    }
    out.consistent = true;
    for (size_t r = next; r < m; ++r)
        if (aug[r][n] != 0) out.consistent = false;
    for (const auto& [r, c] : pivots) out.coeffs[c] = aug[r][n];
    return out;
}

std::string describe(const VectorField& f) {
    std::string out;
    auto piece = [&](const char* name, const Expr& e) {
        if (e.is_zero()) return;
        if (!out.empty()) out += ", ";
        out += std::string(name) + " = " + to_string(e);
    };
    piece("xi", f.xi);
    piece("tau", f.tau);
    piece("phi", f.phi);
    return out.empty() ? "0" : out;
}

}  // namespace

VectorField bracket(const VectorField& a, const VectorField& b) {
    require_concrete(a, "bracket argument");
    require_concrete(b, "bracket argument");
    VectorField out;
    out.xi = apply_as_derivation(a, b.xi) - apply_as_derivation(b, a.xi);
    out.tau = apply_as_derivation(a, b.tau) - apply_as_derivation(b, a.tau);
    out.phi = apply_as_derivation(a, b.phi) - apply_as_derivation(b, a.phi);
    return out;
}

StructureConstants structure_constants(const std::vector<VectorField>& basis) {
    for (const auto& f : basis) require_concrete(f, "basis field");
    size_t n = basis.size();
    StructureConstants sc;
    sc.n = n;
    sc.c.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    if (n == 0) return sc;

    std::vector<std::vector<VectorField>> br(n);
    std::vector<const VectorField*> involved;
    for (const auto& f : basis) involved.push_back(&f);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            br[i].push_back(bracket(basis[i], basis[j]));
            involved.push_back(&br[i].back());
        }
    }
    CoordSpace space = coordinate_space(involved);

    std::vector<std::vector<Rational>> cols;
    for (const auto& f : basis) cols.push_back(coordinates_in(f, space));
    if (matrix_rank(cols) != n)
        throw KernelError("structure constants need linearly independent fields");

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const VectorField& b = br[i][j - i - 1];
            ExactSolve sol = solve_exact(cols, coordinates_in(b, space));
            if (!sol.consistent) {
                VectorField residual = b;
                for (size_t k = 0; k < n; ++k)
                    residual = vf_add(residual, vf_scale(-sol.coeffs[k], basis[k]));
                throw NotClosedError(i, j, describe(residual));
            }
            for (size_t k = 0; k < n; ++k) {
                sc.c[i][j][k] = sol.coeffs[k];
                sc.c[j][i][k] = -sol.coeffs[k];
            }
        }
    }
    return sc;
}

bool jacobi_check(const StructureConstants& sc) {
    size_t n = sc.n;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    Rational acc(0);
                    for (size_t m = 0; m < n; ++m)
                        acc += sc.c[i][j][m] * sc.c[m][k][l] + sc.c[j][k][m] * sc.c[m][i][l] +
                               sc.c[k][i][m] * sc.c[m][j][l];
                    if (acc != 0) return false;
                }
    return true;
}

std::optional<std::vector<Rational>> span_coordinates(const std::vector<VectorField>& basis,
                                                      const VectorField& w) {
    for (const auto& f : basis) require_concrete(f, "basis field");
    require_concrete(w, "target field");
    std::vector<const VectorField*> involved;
    for (const auto& f : basis) involved.push_back(&f);
    involved.push_back(&w);
    CoordSpace space = coordinate_space(involved);
    std::vector<std::vector<Rational>> cols;
    for (const auto& f : basis) cols.push_back(coordinates_in(f, space));
    ExactSolve sol = solve_exact(cols, coordinates_in(w, space));
    if (!sol.consistent) return std::nullopt;
    return sol.coeffs;
}

SymmetryVerdict is_symmetry(const DeterminingSystem& ds, const VectorField& v) {
    SymmetryVerdict out;
    for (size_t k = 0; k < ds.equations.size(); ++k)
        if (!substitute_generator(ds.equations[k].lhs, v).is_zero()) out.violated.push_back(k);
    out.ok = out.violated.empty();
    return out;
}

SymmetryVerdict is_symmetry(const PdeSystem& s, const VectorField& v) {
    return is_symmetry(determining_equations(s), v);
}

}  // namespace liesym
