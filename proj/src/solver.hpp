#pragma once

#include <optional>

#include "detgen.hpp"

namespace liesym {

// One unknown of the polynomial ansatz: the coefficient of x^i y^j u^k in
// the named generator component.
struct AnsatzColumn {
    Fn fn;
    int i, j, k;
};

// Homogeneous exact linear system: one row per (equation, monomial) pair
// whose coefficient must vanish identically.
struct LinearSystem {
    std::vector<AnsatzColumn> columns;
    std::vector<std::vector<Rational>> rows;
};

LinearSystem build_linear_system(const DeterminingSystem& ds, int degree);

// Exact kernel basis. Deterministic: fraction-free forward elimination
// with pivots chosen by minimal bit size (ties: lowest column, then lowest
// row), then the reduced-echelon normalization carrying a unit entry at
// each free column.
std::vector<std::vector<Rational>> nullspace(const LinearSystem& ls);

// Exact rank, same elimination core.
size_t matrix_rank(const std::vector<std::vector<Rational>>& rows);

// Membership of v in the row span of basis, decided by exact rank.
bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v);

// Coordinates of a concrete polynomial field over the given columns.
// Errors when a component mentions a non-base atom or exceeds the degree.
std::vector<Rational> field_coordinates(const VectorField& v,
                                        const std::vector<AnsatzColumn>& columns);

VectorField field_from_coordinates(const std::vector<AnsatzColumn>& columns,
                                   const std::vector<Rational>& coeffs);

struct SolveResult {
    DeterminingSystem detsys;
    LinearSystem system;
    std::vector<std::vector<Rational>> kernel;
    std::vector<VectorField> fields;
};

// Full pipeline: determining equations, ansatz system, kernel, fields.
// Every returned field is re-substituted into the determining system; a
// nonzero residual is a kernel bug and aborts.
SolveResult symmetry_basis(const PdeSystem& s, int degree);

}  // namespace liesym
