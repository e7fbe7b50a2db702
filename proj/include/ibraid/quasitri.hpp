#pragma once

#include "ibraid/tensor.hpp"

namespace ibraid {

// ==== quasitriangular structures ============================================

struct QTStructure {
  FinBialgebra H;
  TensorElement R;
  TensorElement R_inv;
};

// computes and caches the inverse; throws NotInvertible when R is singular
QTStructure make_qt(const FinBialgebra& h, const TensorElement& r);

bool qt_is_triangular(const QTStructure& qt);  // R^op == R^{-1}

// axiom rows: invertible, braided-comul (R Delta(x) = Delta^op(x) R),
// hexagon-1 ((Id x Delta)(R) = R13 R12), hexagon-2 ((Delta x Id)(R) = R13 R23),
// qyb, triangular (R^op = R^{-1}; informational for merely quasitriangular R)
AxiomReport check_quasitriangular(const FinBialgebra& h, const TensorElement& r);

// validity = every row except the informational "triangular" one
bool qt_axioms_pass(const AxiomReport& rep);

struct InfRMatrix {
  QTStructure qt;
  TensorElement chi;
};

// infinitesimal compatibilities of chi with a fixed quasitriangular structure:
// inf-comm      chi Delta(x) = Delta(x) chi
// inf-hexagon-1 (Id x Delta)(chi) = chi_12 + R12^{-1} chi_13 R12
// inf-hexagon-2 (Delta x Id)(chi) = chi_23 + R23^{-1} chi_13 R23
// plus the counit consequences (eps x Id)(chi) = 0 = (Id x eps)(chi)
AxiomReport check_inf_rmatrix(const InfRMatrix& inf);

// solution space of all infinitesimal structures for the given (H, R); the
// unknown lives on n^2 coordinates (i, j) -> i*n + j
SolutionSpace classify_inf_rmatrices(const QTStructure& qt);
InfRMatrix inf_from_coords(const QTStructure& qt, const SRow& coords);
SRow coords_from_chi(const TensorElement& chi);

bool check_cartier(const InfRMatrix& inf);                      // R chi = chi^op R
bool check_q_commutation(const InfRMatrix& inf, const Scalar& q);  // R chi = q chi^op R

// infinitesimal quantum Yang-Baxter equation (six ordered triple products)
bool check_inf_qyb(const InfRMatrix& inf);
// R12^{-1} chi13 R12 = R23^{-1} chi13 R23
bool check_balanced(const InfRMatrix& inf);

// ==== coalgebra cohomology in low degree ====================================

// differential of the cosimplicial complex attached to the coproduct,
// b^n = sum_{i=0}^{n+1} (-1)^i d_i with d_0 = 1 (x) -, d_{n+1} = - (x) 1 and
// d_i = coproduct on leg i; supported for n = 0..3
TensorElement cobar_apply(const FinBialgebra& h, const TensorElement& a);
LinearMap cobar_differential(const FinBialgebra& h, int n);

struct CohomologyDims {
  int cocycles = 0, coboundaries = 0, cohomology = 0;
};

// n = 1 or 2; also verifies b^{n+1} b^n = 0 on the basis
CohomologyDims cohomology_dim(const FinBialgebra& h, int n);

// ==== Casimir element and coactions =========================================

TensorElement casimir_element(const InfRMatrix& inf);  // m (S x Id)(chi), order 1

struct CasimirReport {
  bool central = false;          // gamma h = h gamma for all basis h
  bool coboundary_sum = false;   // b^1(gamma) = chi + flip (S x S)(chi)
  bool coboundary_two = false;   // b^1(gamma) = 2 chi
};

CasimirReport check_casimir(const InfRMatrix& inf);

// rho^r(a) = R^{-1} (a x 1) R and rho^l(a) = R^{-1} (1 x a) R on order-1 input
TensorElement triangle_coaction_right(const QTStructure& qt, const TensorElement& a);
TensorElement triangle_coaction_left(const QTStructure& qt, const TensorElement& a);

// antipode interplay for pre-Cartier *triangular* Hopf data; throws
// TriangularRequired unless R^op = R^{-1} and an antipode is present.
// axiom rows: coaction-antipode   rho^l(S a) = flip (S x S) rho^r(a)
//             chi-antipode-left   (m x Id)(S x rho^l)(chi) = -chi
//             chi-antipode-right  (Id x m)(rho^r x S)(chi) = -chi
//             chi-flip-SS         flip (S x S)(chi) = chi   (Cartier only)
AxiomReport check_antipode_identities(const InfRMatrix& inf);

}  // namespace ibraid
