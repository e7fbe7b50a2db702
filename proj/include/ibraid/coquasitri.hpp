#pragma once

#include "ibraid/quasitri.hpp"

namespace ibraid {

// ==== coquasitriangular structures ==========================================

struct CoQTStructure {
  FinBialgebra H;
  MultiForm R;      // order-2 bicharacter H (x) H -> k
  MultiForm R_inv;  // cached convolution inverse
};

// computes and caches the convolution inverse; throws NotConvInvertible
CoQTStructure make_coqt(const FinBialgebra& h, const MultiForm& r);

bool coqt_is_cotriangular(const CoQTStructure& cq);  // R^op == R^{-1}

// axiom rows: conv-invertible, braided-mul (R(a1,b1) a2 b2 = b1 a1 R(a2,b2)),
// hexagon-1 (R(a, bc) = R(a1, c) R(a2, b), i.e. R(Id x m) = R13 * R12),
// hexagon-2 (R(ab, c) = R(a, c1) R(b, c2), i.e. R(m x Id) = R13 * R23),
// qyb (R12 * R13 * R23 = R23 * R13 * R12),
// cotriangular (R(a1,b1) R(b2,a2) = eps(a) eps(b); informational otherwise)
AxiomReport check_coquasitriangular(const FinBialgebra& h, const MultiForm& r);

// validity = every row except the informational "cotriangular" one
bool coqt_axioms_pass(const AxiomReport& rep);

struct InfRForm {
  CoQTStructure cq;
  MultiForm chi;
};

// infinitesimal compatibilities of the form chi with a fixed R-form:
// inf-comm      chi(a1,b1) a2 b2 = a1 b1 chi(a2,b2)
// inf-hexagon-1 chi(Id x m) = chi_12 + R12^{-1} * chi_13 * R12
// inf-hexagon-2 chi(m x Id) = chi_23 + R23^{-1} * chi_13 * R23
// plus the counit consequences chi(1, a) = 0 = chi(a, 1)
AxiomReport check_inf_rform(const InfRForm& inf);

// solution space of all infinitesimal R-forms for the given (H, R); the
// unknown lives on n^2 coordinates chi(e_i, e_j) -> i*n + j
SolutionSpace classify_inf_rforms(const CoQTStructure& cq);
InfRForm inf_form_from_coords(const CoQTStructure& cq, const SRow& coords);
SRow coords_from_form(const MultiForm& chi);

bool check_form_cc4(const InfRForm& inf);  // R * chi = chi^op * R

// ==== triangle actions ======================================================

// a <| b = R^{-1}(a1, b1) a2 R(a3, b2)   (right action)
// b |> a = R^{-1}(b1, a1) a2 R(b2, a3)   (left action)
// both on order-1 tensors, extended bilinearly
TensorElement triangle_action_right(const CoQTStructure& cq,
                                    const TensorElement& a, const TensorElement& b);
TensorElement triangle_action_left(const CoQTStructure& cq,
                                   const TensorElement& b, const TensorElement& a);

// ==== algebra cohomology in low degree ======================================

// differential of the complex Hom(H^{(x) n}, k) with trivial coefficients
// through the counit on both sides:
// b^n(f)(a_0,...,a_n) = eps(a_0) f(a_1,...,a_n)
//                       + sum_{i=1}^n (-1)^i f(..., a_{i-1} a_i, ...)
//                       + (-1)^{n+1} f(a_0,...,a_{n-1}) eps(a_n)
MultiForm bar_apply(const FinBialgebra& h, const MultiForm& f);
LinearMap bar_differential(const FinBialgebra& h, int n);  // n = 0..3

// n = 1 or 2; also verifies b^{n+1} b^n = 0 on the basis
CohomologyDims bar_cohomology_dim(const FinBialgebra& h, int n);

// ==== Casimir form ==========================================================

MultiForm casimir_form(const InfRForm& inf);  // gamma(x) = chi(S(x1), x2), order 1

// central    gamma(x1) x2 = x1 gamma(x2) for all basis x
// coboundary_sum  b^1(gamma) = chi + chi^op (S x S)
// coboundary_two  b^1(gamma) = 2 chi
CasimirReport check_casimir_form(const InfRForm& inf);

// ==== transfer along the linear dual ========================================

// full linear dual with transposed structure constants; always a bialgebra in
// finite dimension (antipode transposes when present)
FinBialgebra finite_dual(const FinBialgebra& h);

CoQTStructure dualize_qt(const QTStructure& qt);       // element R  -> form on H^*
InfRForm dualize_inf(const InfRMatrix& inf);
QTStructure dualize_coqt_to_qt(const CoQTStructure& cq);  // form R -> element of H^* (x) H^*
InfRMatrix dualize_form_to_element(const InfRForm& inf);

}  // namespace ibraid
