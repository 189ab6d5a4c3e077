#pragma once

#include <optional>
#include <vector>

#include "detgen.hpp"
#include "system.hpp"

namespace liesym {

// Lie bracket of two point vector fields, componentwise a(b_i) - b(a_i)
// where a field acts on functions of (x, y, u) as xi*d/dx + tau*d/dy +
// phi*d/du. Both arguments must be concrete.
VectorField bracket(const VectorField& a, const VectorField& b);

// Structure tensor of a basis: [e_i, e_j] = sum_k c[i][j][k] e_k.
struct StructureConstants {
    size_t n = 0;
    std::vector<std::vector<std::vector<Rational>>> c;
};

// Expands every pairwise bracket over the given fields. The fields must be
// linearly independent (KernelError otherwise); a bracket that leaves the
// span raises NotClosedError carrying the offending pair and the residual.
StructureConstants structure_constants(const std::vector<VectorField>& basis);

// Jacobi identity on the structure tensor alone:
// sum_m c[i][j][m] c[m][k][l] + c[j][k][m] c[m][i][l] + c[k][i][m] c[m][j][l]
// vanishes for all i < j < k and all l.
bool jacobi_check(const StructureConstants& sc);

// Coordinates of w in the rational span of the fields, when it lies there.
std::optional<std::vector<Rational>> span_coordinates(const std::vector<VectorField>& basis,
                                                      const VectorField& w);

struct SymmetryVerdict {
    bool ok = true;
    std::vector<size_t> violated;  // indices into DeterminingSystem::equations
};

// Substitutes the field into every determining equation and reports which
// ones survive with a nonzero residue.
SymmetryVerdict is_symmetry(const DeterminingSystem& ds, const VectorField& v);
SymmetryVerdict is_symmetry(const PdeSystem& s, const VectorField& v);

}  // namespace liesym
