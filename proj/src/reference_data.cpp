#include "reference_data.hpp"

#include "parser.hpp"

namespace liesym {
namespace ref {

const char* const kBracketPhiX =
    "-phi_x - phi_u*u1 + (xi_x + xi_u*u1)*u1 + (tau_x + tau_u*u1)*u2";

const char* const kBracketPhiY =
    "-phi_y - phi_u*u2 + (xi_y + xi_u*u2)*u1 + (tau_y + tau_u*u2)*u2";

const char* const kBracketPhiXX =
    "xi_uu*u1^3 + tau_uu*u1^2*u2 + 3*xi_u*u1*u11 + 2*tau_u*u1*u12 + tau_u*u2*u11"
    " + 2*xi_xu*u1^2 + 2*tau_xu*u1*u2 - phi_uu*u1^2 - phi_u*u11 + 2*xi_x*u11"
    " + 2*tau_x*u12 - 2*phi_xu*u1 + xi_xx*u1 + tau_xx*u2 - phi_xx";

const char* const kBracketPhiXY =
    "-phi_xy - phi_xu*u2 - (-xi_xy - xi_xu*u2)*u1 - (-tau_xy - tau_xu*u2)*u2"
    " - (phi_yu + phi_uu*u2 + (-xi_yu - xi_uu*u2)*u1 + (-tau_yu - tau_uu*u2)*u2)*u1"
    " - (-xi_y - xi_u*u2)*u11 - (phi_u - xi_u*u1 - 2*tau_u*u2 - tau_y)*u12"
    " + (xi_x + xi_u*u1)*u12 + (tau_x + tau_u*u1)*u22";

const char* const kBracketPhiXXX =
    "3*tau_u*u11*u12 + 4*xi_u*u1*u111 + tau_u*u2*u111 + 3*tau_u*u1*u112"
    " + 6*xi_uu*u1^2*u11 + 3*tau_uu*u1^2*u12 - 3*phi_uu*u1*u11 + 3*tau_xxu*u1*u2"
    " + 3*tau_xuu*u1^2*u2 + 9*xi_xu*u1*u11 + 3*tau_xu*u2*u11 + 6*tau_xu*u1*u12"
    " + tau_uuu*u1^3*u2 + 3*tau_uu*u1*u2*u11 - 3*phi_xxu*u1 + 3*xi_xxu*u1^2"
    " + xi_xxx*u1 + tau_xxx*u2 + 3*xi_xuu*u1^3 - 3*phi_xuu*u1^2 - 3*phi_xu*u11"
    " + 3*xi_xx*u11 + 3*tau_xx*u12 + xi_uuu*u1^4 - phi_uuu*u1^3 - phi_xxx"
    " + 3*xi_u*u11^2 - phi_u*u111 + 3*xi_x*u111 + 3*tau_x*u112";

const char* const kBindingU12 =
    "F3_u*u1^4 + F3_u1*u1^3*u11 + F2_u*u1^3 + F3_x*u1^3 + 3*F3*u1^2*u11"
    " + F1_u*u1^2 + F2_x*u1^2 + 2*F2*u1*u11 + F1_x*u1 + F1*u11";

const char* const kBindingU112 =
    "2*F1_x*u11 + 2*F2*u11^2 + F1*G + 6*F3_x*u1^2*u11 + 4*F2_x*u1*u11"
    " + 7*F3_u*u1^3*u11 + 5*F2_u*u1^2*u11 + 3*F1_u*u1*u11 + 6*F3_u1*u1^2*u11^2"
    " + 6*F3*u1*u11^2 + F3_u1*u1^3*G + 3*F3*u1^2*G + 2*F2*u1*G"
    " + F3_u1u1*u1^3*u11^2 + 2*F3_xu1*u1^3*u11 + 2*F3_uu1*u1^4*u11 + F3_xx*u1^3"
    " + F1_xu*u1^2 + F3_uu*u1^5 + F2_uu*u1^4 + F1_uu*u1^3 + F1_xx*u1"
    " + F2_xx*u1^2 + 2*F3_xu*u1^4 + 2*F2_xu*u1^3";

const char* const kBindingU112Corrected =
    "2*F1_x*u11 + 2*F2*u11^2 + F1*G + 6*F3_x*u1^2*u11 + 4*F2_x*u1*u11"
    " + 7*F3_u*u1^3*u11 + 5*F2_u*u1^2*u11 + 3*F1_u*u1*u11 + 6*F3_u1*u1^2*u11^2"
    " + 6*F3*u1*u11^2 + F3_u1*u1^3*G + 3*F3*u1^2*G + 2*F2*u1*G"
    " + F3_u1u1*u1^3*u11^2 + 2*F3_xu1*u1^3*u11 + 2*F3_uu1*u1^4*u11 + F3_xx*u1^3"
    " + 2*F1_xu*u1^2 + F3_uu*u1^5 + F2_uu*u1^4 + F1_uu*u1^3 + F1_xx*u1"
    " + F2_xx*u1^2 + 2*F3_xu*u1^4 + 2*F2_xu*u1^3";

const char* const kCond1Raw =
    "xi*(-F1_x*u1 - F2_x*u1^2 - F3_x*u1^3) + tau*(-F1_y*u1 - F2_y*u1^2 - F3_y*u1^3)"
    " + phi*(-F1_u*u1 - F2_u*u1^2 - F3_u*u1^3)"
    " + (phi_x + phi_u*u1 - (xi_x + xi_u*u1)*u1 - (tau_x + tau_u*u1)*u2)"
    "*(-F1 - 2*F2*u1 - F3_u1*u1^3 - 3*F3*u1^2)"
    " + phi_y + phi_u*u2 - (xi_y + xi_u*u2)*u1 - (tau_y + tau_u*u2)*u2";

const char* const kCond2Raw =
    "phi_xxx - 3*tau_u*u11*u12 - 4*xi_u*u1*u111 - tau_u*u2*u111 - 3*tau_u*u1*u112"
    " - 3*tau_xxu*u1*u2 - 3*tau_xuu*u1^2*u2 - 9*xi_xu*u1*u11 - 3*tau_xu*u2*u11"
    " - 6*tau_xu*u1*u12 - tau_uuu*u1^3*u2 - 6*xi_uu*u1^2*u11 - 3*tau_uu*u1^2*u12"
    " + 3*phi_uu*u1*u11 - 3*tau_uu*u1*u2*u11 - 3*xi_u*u11^2 + phi_u*u111"
    " - 3*xi_x*u111 - 3*tau_x*u112 - xi*G_x - tau*G_y - phi*G_u"
    " - (phi_x + phi_u*u1 - (xi_x + xi_u*u1)*u1 - (tau_x + tau_u*u1)*u2)*G_u1"
    " + 3*phi_xxu*u1 - 3*xi_xxu*u1^2 - xi_xxx*u1 - tau_xxx*u2 - 3*xi_xuu*u1^3"
    " + 3*phi_xuu*u1^2 + 3*phi_xu*u11 - 3*xi_xx*u11 - 3*tau_xx*u12 - xi_uuu*u1^4"
    " + phi_uuu*u1^3";

const char* const kCond1OnShell =
    "-xi_y*u1 + F1*xi_x*u1 + 2*F2*xi_x*u1^2 + F3_u1*xi_x*u1^4 + 3*F3*xi_x*u1^3"
    " + F2*xi_u*u1^3 + F3_u1*xi_u*u1^5 + 2*F3*xi_u*u1^4 + 3*F3^2*tau_x*u1^5"
    " + 2*F2^2*tau_x*u1^3 + F1^2*tau_x*u1 + 2*F3^2*tau_u*u1^6 + F2^2*tau_u*u1^4"
    " - F3*tau_y*u1^3 - F2*tau_y*u1^2 - F1*tau_y*u1 - F1_x*xi*u1 - F2_x*xi*u1^2"
    " - F3_x*xi*u1^3 - F1_y*tau*u1 - F2_y*tau*u1^2 - F3_y*tau*u1^3 - F1_u*phi*u1"
    " - F2_u*phi*u1^2 - F3_u*phi*u1^3 - 2*F2*phi_x*u1 - F3_u1*phi_x*u1^3"
    " - 3*F3*phi_x*u1^2 - F2*phi_u*u1^2 - F3_u1*phi_u*u1^4 - 2*F3*phi_u*u1^3"
    " - F1*phi_x + F1*F2*tau_u*u1^3 + F2*F3_u1*tau_u*u1^6 + F1*F3_u1*tau_u*u1^5"
    " + 4*F1*F3*tau_x*u1^3 + 5*F2*F3*tau_x*u1^4 + F3*F3_u1*tau_x*u1^6"
    " + 3*F1*F2*tau_x*u1^2 + F2*F3_u1*tau_x*u1^5 + F1*F3_u1*tau_x*u1^4"
    " + 2*F1*F3*tau_u*u1^4 + 3*F2*F3*tau_u*u1^5 + F3*F3_u1*tau_u*u1^7 + phi_y";

const char* const kCond2StratumU11Sq =
    "xi_u + F1*tau_u + 2*F2*tau_x + (6*F3*tau_x + 4*F2*tau_u)*u1"
    " + (6*F3_u1*tau_x + 9*F3*tau_u)*u1^2 + (F3_u1u1*tau_x + 7*F3_u1*tau_u)*u1^3"
    " + F3_u1u1*tau_u*u1^4";

const char* const kCond2StratumU11Lin =
    "3*phi_xu - 3*xi_xx - 3*F1*tau_xx - 6*F1_x*tau_x - 9*xi_xu*u1 + 3*phi_uu*u1"
    " - 6*xi_uu*u1^2 - 6*F1*tau_uu*u1^2 - 6*F3_xu1*tau_x*u1^3 - 6*F3_uu1*tau_x*u1^4"
    " - 3*F3_u1*tau_xx*u1^3 - 9*F3*tau_xx*u1^2 - 6*F2*tau_xx*u1"
    " - 6*F3_xu1*tau_u*u1^4 - 6*F3_uu1*tau_u*u1^5 - 15*F2*tau_xu*u1^2"
    " - 21*F3*tau_xu*u1^3 - 9*F1*tau_xu*u1 - 6*F3_u1*tau_xu*u1^4"
    " - 12*F3*tau_uu*u1^4 - 3*F3_u1*tau_uu*u1^5 - 9*F2*tau_uu*u1^3"
    " - 21*F3_x*tau_u*u1^3 - 15*F2_x*tau_u*u1^2 - 12*F1_u*tau_u*u1^2"
    " - 9*F1_x*tau_u*u1 - 24*F3_u*tau_u*u1^4 - 18*F2_u*tau_u*u1^3"
    " - 18*F3_x*tau_x*u1^2 - 12*F2_x*tau_x*u1 - 21*F3_u*tau_x*u1^3"
    " - 15*F2_u*tau_x*u1^2 - 9*F1_u*tau_x*u1";

const char* const kCond2StratumU11Free =
    "G*phi_u - 3*G*xi_x - G_u1*phi_x + phi_xxx - 6*F3_xu*tau_x*u1^4"
    " - 6*F2_xu*tau_x*u1^3 - 6*F1_xu*tau_x*u1^2 - 3*F3_uu*tau_x*u1^5"
    " - 3*F2_uu*tau_x*u1^4 - 3*F1_uu*tau_x*u1^3 - 3*F1_xx*tau_x*u1"
    " - 3*F2_xx*tau_x*u1^2 - 3*F3_xx*tau_x*u1^3 - F3*tau_xxx*u1^3"
    " - F2*tau_xxx*u1^2 - F1*tau_xxx*u1 - 3*F3_u*tau_xx*u1^4 - 3*F2_u*tau_xx*u1^3"
    " - 3*F3_x*tau_xx*u1^3 - 3*F1_u*tau_xx*u1^2 - 3*F2_x*tau_xx*u1^2"
    " - 3*F1_x*tau_xx*u1 - 3*F3*tau_xxu*u1^4 - 3*F2*tau_xxu*u1^3"
    " - 3*F1*tau_xxu*u1^2 - 3*F2*tau_xuu*u1^4 - 3*F3*tau_xuu*u1^5"
    " - 3*F1*tau_xuu*u1^3 - 6*F3_u*tau_xu*u1^5 - 6*F2_u*tau_xu*u1^4"
    " - 6*F3_x*tau_xu*u1^4 - 6*F1_u*tau_xu*u1^3 - 6*F2_x*tau_xu*u1^3"
    " - 6*F1_x*tau_xu*u1^2 - F2*tau_uuu*u1^5 - F3*tau_uuu*u1^6 - F1*tau_uuu*u1^4"
    " - 3*F3_u*tau_uu*u1^6 - 3*F2_u*tau_uu*u1^5 - 3*F3_x*tau_uu*u1^5"
    " - 3*F1_u*tau_uu*u1^4 - 3*F2_x*tau_uu*u1^4 - 3*F1_x*tau_uu*u1^3"
    " - 6*F3_xu*tau_u*u1^5 - 6*F2_xu*tau_u*u1^4 - 6*F1_xu*tau_u*u1^3"
    " - 3*F3_uu*tau_u*u1^6 - 3*F2_uu*tau_u*u1^5 - 3*F1_uu*tau_u*u1^4"
    " - 3*F2_xx*tau_u*u1^3 - 3*F1_xx*tau_u*u1^2 - 3*F3_xx*tau_u*u1^4"
    " - G_u1*phi_u*u1 + G_u1*xi_x*u1 + G_u1*xi_u*u1^2 - 3*F1*G*tau_x"
    " - 4*G*xi_u*u1 + phi_uuu*u1^3 + 3*phi_xxu*u1 - 3*xi_xxu*u1^2 - xi_xxx*u1"
    " - 3*xi_xuu*u1^3 + 3*phi_xuu*u1^2 - xi_uuu*u1^4 + F1*G_u1*tau_x*u1"
    " + F3*G_u1*tau_u*u1^4 + F2*G_u1*tau_u*u1^3 + F1*G_u1*tau_u*u1^2"
    " - 3*F3_u1*G*tau_x*u1^3 - 9*F3*G*tau_x*u1^2 - 6*F2*G*tau_x*u1"
    " - 3*F3_u1*G*tau_u*u1^4 + F3*G_u1*tau_x*u1^3 + F2*G_u1*tau_x*u1^2"
    " - 10*F3*G*tau_u*u1^3 - 7*F2*G*tau_u*u1^2 - 4*F1*G*tau_u*u1 - G_x*xi"
    " - G_y*tau - G_u*phi";

const std::array<const char*, 14> kModelEquations = {
    "tau_u",
    "phi_x + xi_y",
    "3*phi_ux - 3*xi_xx",
    "xi_u + 2*tau_x",
    "3*phi_uxx - xi_xxx",
    "5*tau_ux + 2*xi_uu",
    "3*tau_uux + xi_uuu",
    "2*xi_x - tau_y - phi_u",
    "3*xi_xu + 2*tau_xx - phi_uu",
    "3*xi_xuu + 3*tau_uxx - phi_uuu",
    "3*xi_xxu + tau_xxx - 3*phi_xuu",
    "phi_y",
    "phi_xxx",
    "tau_u",
};

const char* const kModelFlaggedCorrected = "2*phi_x + xi_y";

const char* const kSeriesRelationU11SqU1 = "3*F3[0]*tau_x + 2*F2*tau_u";
const char* const kSeriesRelationU11SqU0 = "xi_u + F1*tau_u + 2*F2*tau_x";

Expr parse_ref(const char* text) { return parse_expr(text); }

}  // namespace ref
}  // namespace liesym
