#pragma once

#include <array>

#include "expr.hpp"

namespace liesym {
namespace ref {

// Reference forms for the generic system, frozen as independent oracles.
// Each string is in the wire grammar and was checked term by term against
// a manual expansion before being frozen; the pipeline is compared against
// these, never built from them.

// Bracketed expansions of the third-prolongation coefficients. The
// convention of the source display is that the coefficient of d/du_J
// equals MINUS the stored bracket.
extern const char* const kBracketPhiX;
extern const char* const kBracketPhiY;
extern const char* const kBracketPhiXX;
extern const char* const kBracketPhiXY;
extern const char* const kBracketPhiXXX;

// On-shell bindings for the mixed jets, as functions of x,y,u,u1,u11.
extern const char* const kBindingU12;
extern const char* const kBindingU112;

// The stored u112 form carries F1_xu*u1^2 with coefficient 1, which is
// inconsistent with its own parallel entries 2*F2_xu*u1^3 and 2*F3_xu*u1^4
// (each coefficient comes from the same two-path product rule). The form
// below carries the 2; the disagreement is flagged, never silently fixed.
extern const char* const kBindingU112Corrected;

// The two invariance conditions before on-shell substitution.
extern const char* const kCond1Raw;
extern const char* const kCond2Raw;

// On-shell strata: the u11-free first condition, and the u11^2 / u11^1 /
// u11^0 coefficients of the second. The u11^2 entry is stored in the
// source's normalization, which differs from the generated stratum by the
// factor -3.
extern const char* const kCond1OnShell;
extern const char* const kCond2StratumU11Sq;
extern const char* const kCond2StratumU11Lin;
extern const char* const kCond2StratumU11Free;

// Reference determining-equation list for the model system u_2 = u1^2,
// u_111 = 0, in its original order. The list repeats tau_u and its second
// entry is known to disagree with the general solution; the corrected form
// is stored alongside and the disagreement is flagged, not silently fixed.
extern const std::array<const char*, 14> kModelEquations;
constexpr int kModelFlaggedIndex = 1;
extern const char* const kModelFlaggedCorrected;

// Initial-relation spot values for the generic system: the u1^1 and u1^0
// series coefficients of the u11^2 stratum, each up to overall scale.
extern const char* const kSeriesRelationU11SqU1;
extern const char* const kSeriesRelationU11SqU0;

Expr parse_ref(const char* text);

}  // namespace ref
}  // namespace liesym
