#include "ibraid/twist.hpp"

namespace ibraid {

namespace {

std::string diff_str(const FinBialgebra& h, const TensorElement& lhs,
                     const TensorElement& rhs) {
  TensorElement d = te_sub(lhs, rhs);
  if (d.is_zero()) return "";
  const auto& key = d.c.begin()->first;
  std::string lbl;
  for (size_t i = 0; i < key.size(); ++i) {
    if (i) lbl += "⊗";
    lbl += h.basis[key[i]];
  }
  return "at " + lbl + ": lhs = " + scalar_str(te_coeff(lhs, key), h.field) +
         ", rhs = " + scalar_str(te_coeff(rhs, key), h.field);
}

SVec svec_of_order1(const TensorElement& a) {
  SVec v;
  for (const auto& [key, c] : a.c) v.emplace_back(key[0], c);
  return v;
}

}  // namespace

// ==== twist checks ==========================================================

AxiomReport check_twist(const FinBialgebra& h, const TensorElement& f) {
  if (f.order != 2) fail(Err::Input, "a twist must have order 2");
  AxiomReport rep;
  bool invertible = true;
  try {
    invert_in_tensor_algebra(h, f);
  } catch (const Error&) {
    invertible = false;
  }
  rep.axioms.push_back({"invertible", invertible, invertible ? "" : "F has no inverse"});

  TensorElement lhs = tensor_mul(h, leg_embed(h, f, 3, {1, 2}), apply_coproduct_leg(h, f, 1));
  TensorElement rhs = tensor_mul(h, leg_embed(h, f, 3, {2, 3}), apply_coproduct_leg(h, f, 2));
  bool cocycle = te_eq(lhs, rhs);
  rep.axioms.push_back({"2-cocycle", cocycle, cocycle ? "" : diff_str(h, lhs, rhs)});

  TensorElement left = apply_counit_leg(h, f, 1), right = apply_counit_leg(h, f, 2);
  TensorElement one = te_unit(h, 1);
  bool normal = te_eq(left, one) && te_eq(right, one);
  std::string w;
  if (!te_eq(left, one))
    w = "(eps x Id)(F): " + diff_str(h, left, one);
  else if (!te_eq(right, one))
    w = "(Id x eps)(F): " + diff_str(h, right, one);
  rep.axioms.push_back({"normalized", normal, w});
  return rep;
}

DrinfeldTwist make_twist(const FinBialgebra& h, const TensorElement& f) {
  AxiomReport rep = check_twist(h, f);
  if (!rep.all_pass()) fail(Err::Input, "not a Drinfel'd twist: " + rep.summary());
  return DrinfeldTwist{h, f, invert_in_tensor_algebra(h, f)};
}

// ==== twisted structures ====================================================

FinBialgebra twist_bialgebra(const DrinfeldTwist& tw) {
  const FinBialgebra& h = tw.H;
  FinBialgebra g = h;
  if (!g.name.empty()) g.name += "_F";
  for (int i = 0; i < h.dim(); ++i) {
    TensorElement d = tensor_mul(
        h, tw.F, tensor_mul(h, te_delta_power(h, i, 1), tw.F_inv));
    std::vector<ComulTerm> terms;
    terms.reserve(d.c.size());
    for (const auto& [key, c] : d.c) terms.push_back({key[0], key[1], c});
    g.comul[i] = std::move(terms);
  }
  if (h.antipode) {
    SVec u = svec_of_order1(apply_mul_legs(h, apply_antipode_leg(h, tw.F, 2), 1));
    TensorElement ut = te_zero(h, 1);
    for (const auto& [i, c] : u) te_accum(ut, {i}, c);
    SVec u_inv = svec_of_order1(invert_in_tensor_algebra(h, ut));
    std::vector<std::vector<Scalar>> s(h.dim(), std::vector<Scalar>(h.dim(), Scalar(0)));
    for (int j = 0; j < h.dim(); ++j) {
      SVec img = mul_vec(h, mul_vec(h, u, antipode_vec(h, {{j, Scalar(1)}})), u_inv);
      for (const auto& [i, c] : img) s[i][j] = c;
    }
    g.antipode = std::move(s);
  }
  AxiomReport rep = validate_bialgebra(g);
  if (!rep.all_pass())
    fail(Err::Input, "twisted bialgebra failed validation: " + rep.summary());
  return g;
}

QTStructure twist_qt(const DrinfeldTwist& tw, const QTStructure& qt) {
  const FinBialgebra& h = tw.H;
  if (qt.H.dim() != h.dim() || !(qt.H.field == h.field))
    fail(Err::Input, "twist and structure live on different bialgebras");
  FinBialgebra hf = twist_bialgebra(tw);
  TensorElement rf = tensor_mul(h, flip_op(tw.F), tensor_mul(h, qt.R, tw.F_inv));
  QTStructure out = make_qt(hf, rf);
  AxiomReport rep = check_quasitriangular(hf, rf);
  if (!qt_axioms_pass(rep))
    fail(Err::Input, "twisted structure failed verification: " + rep.summary());
  return out;
}

InfRMatrix twist_inf(const DrinfeldTwist& tw, const InfRMatrix& inf) {
  const FinBialgebra& h = tw.H;
  QTStructure qtf = twist_qt(tw, inf.qt);
  TensorElement xf = tensor_mul(h, tw.F, tensor_mul(h, inf.chi, tw.F_inv));
  InfRMatrix out{std::move(qtf), std::move(xf)};
  AxiomReport rep = check_inf_rmatrix(out);
  if (!rep.all_pass())
    fail(Err::Input, "twisted infinitesimal structure failed verification: " + rep.summary());
  return out;
}

// ==== formal hbar deformation ===============================================

TensorElement hbar_deform(const QTStructure& qt, const TensorElement& chi, int trunc) {
  if (trunc < 2) fail(Err::Input, "truncation order must be at least 2");
  if (qt.H.field.kind != FieldKind::Rational)
    fail(Err::Input, "hbar deformation needs a rational base field");
  Field jf = field_truncated(trunc);
  FinBialgebra hl = lift_bialgebra(qt.H, jf);
  TensorElement hx = te_scale(te_lift(chi, jf), Scalar::variable(jf));
  TensorElement acc = te_unit(hl, 2);   // exp(hbar chi), truncated
  TensorElement term = te_unit(hl, 2);
  for (int k = 1; k < trunc; ++k) {
    term = te_scale(tensor_mul(hl, term, hx), Scalar(1) / Scalar(k));
    if (term.is_zero()) break;
    acc = te_add(acc, term);
  }
  return tensor_mul(hl, te_lift(qt.R, jf), acc);
}

AxiomReport check_hbar_quasitriangular(const FinBialgebra& h, const TensorElement& r_tilde) {
  if (h.field.kind != FieldKind::TruncatedPoly)
    fail(Err::Input, "expected a bialgebra over a truncated polynomial ring");
  return check_quasitriangular(h, r_tilde);
}

FirstOrderData extract_first_order(const FinBialgebra& h, const TensorElement& r_tilde) {
  if (h.field.kind != FieldKind::Rational)
    fail(Err::Input, "extraction lands in a rational base field");
  TensorElement r0 = te_jet_slice(r_tilde, 0);
  TensorElement r1 = te_jet_slice(r_tilde, 1);
  TensorElement inv = invert_in_tensor_algebra(h, r0);
  return FirstOrderData{r0, tensor_mul(h, inv, r1)};
}

}  // namespace ibraid
