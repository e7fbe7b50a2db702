#pragma once

#include "ibraid/quasitri.hpp"

namespace ibraid {

// ==== Drinfel'd twists ======================================================

struct DrinfeldTwist {
  FinBialgebra H;
  TensorElement F;
  TensorElement F_inv;
};

// axiom rows: invertible, 2-cocycle ((F x 1)(Delta x Id)(F) = (1 x F)(Id x Delta)(F)),
// normalized ((eps x Id)(F) = 1 = (Id x eps)(F))
AxiomReport check_twist(const FinBialgebra& h, const TensorElement& f);

// verifies the axioms and caches the inverse; throws on a non-twist
DrinfeldTwist make_twist(const FinBialgebra& h, const TensorElement& f);

// same algebra, conjugated comultiplication Delta_F = F Delta(.) F^{-1}; the
// antipode (when present) becomes S_F(a) = U S(a) U^{-1} with U = m (Id x S)(F)
FinBialgebra twist_bialgebra(const DrinfeldTwist& tw);

QTStructure twist_qt(const DrinfeldTwist& tw, const QTStructure& qt);  // R_F = F^op R F^{-1}
InfRMatrix twist_inf(const DrinfeldTwist& tw, const InfRMatrix& inf);  // chi_F = F chi F^{-1}

// ==== formal deformation in a truncated polynomial ring =====================

// R exp(hbar chi) truncated at hbar^trunc; needs a rational base field and
// trunc >= 2; the result lives over field_truncated(trunc)
TensorElement hbar_deform(const QTStructure& qt, const TensorElement& chi, int trunc);

// quasitriangular axioms over the truncated ring (h must carry a truncated
// field, e.g. via lift_bialgebra)
AxiomReport check_hbar_quasitriangular(const FinBialgebra& h, const TensorElement& r_tilde);

struct FirstOrderData {
  TensorElement R;    // order-0 slice over the rational base field
  TensorElement chi;  // R^{-1} times the order-1 slice
};

// splits R~ = R (1 + hbar chi + O(hbar^2)); `h` is the bialgebra over the
// rational base field; throws NotInvertible when the order-0 slice is singular
FirstOrderData extract_first_order(const FinBialgebra& h, const TensorElement& r_tilde);

}  // namespace ibraid
