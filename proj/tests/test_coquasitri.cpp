#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ibraid/constructions.hpp"
#include "ibraid/coquasitri.hpp"

using namespace ibraid;

namespace {

TensorElement b1(const FinBialgebra& h, int i) { return te_basis(h, {i}); }

TensorElement te_from_svec(const FinBialgebra& h, const SVec& v) {
  TensorElement a = te_zero(h, 1);
  for (const auto& [i, c] : v) te_accum(a, {i}, c);
  return a;
}

// concatenation (x) of two order-1 elements into an order-2 element
TensorElement concat2(const FinBialgebra& h, const TensorElement& a,
                      const TensorElement& b) {
  return tensor_mul(h, leg_embed(h, a, 2, {1}), leg_embed(h, b, 2, {2}));
}

Scalar eps_of(const FinBialgebra& h, const TensorElement& a) {
  Scalar s(0);
  for (const auto& [k, v] : a.c) s = s + v * h.counit[k[0]];
  return s;
}

}  // namespace

// ==== transfer to the dual side ==============================================

TEST_CASE("dualized Sweedler structures are coquasitriangular and cotriangular") {
  FinBialgebra h = sweedler_bialgebra();
  for (long lam : {0L, 1L, 2L}) {
    QTStructure qt = make_qt(h, sweedler_R(Scalar(lam)));
    CoQTStructure cq = dualize_qt(qt);
    AxiomReport rep = check_coquasitriangular(cq.H, cq.R);
    CHECK(rep.all_pass());
    CHECK(coqt_axioms_pass(rep));
    CHECK(coqt_is_cotriangular(cq));
    CHECK(validate_bialgebra(cq.H).all_pass());
  }
}

TEST_CASE("form classification matches the element classification") {
  FinBialgebra h = sweedler_bialgebra();
  for (long lam : {0L, 1L, 2L}) {
    QTStructure qt = make_qt(h, sweedler_R(Scalar(lam)));
    CoQTStructure cq = dualize_qt(qt);
    SolutionSpace forms = classify_inf_rforms(cq);
    SolutionSpace elems = classify_inf_rmatrices(qt);
    CHECK(forms.dim() == elems.dim());
    // dualized infinitesimal elements land inside the form space
    for (const SRow& row : elems.basis) {
      InfRMatrix inf = inf_from_coords(qt, row);
      InfRForm dual = dualize_inf(inf);
      CHECK(check_inf_rform(dual).all_pass());
      CHECK(forms.contains(coords_from_form(dual.chi)));
    }
  }
  QTStructure qz2 = make_qt(group_algebra_z2(), group_algebra_z2_R());
  CHECK(classify_inf_rforms(dualize_qt(qz2)).dim() == 0);
  FinBialgebra tr = trivial_bialgebra();
  QTStructure qtr = make_qt(tr, te_basis(tr, {0, 0}));
  CHECK(classify_inf_rforms(dualize_qt(qtr)).dim() == 0);
}

TEST_CASE("classified forms satisfy the derived convolution identities") {
  FinBialgebra h = sweedler_bialgebra();
  QTStructure qt = make_qt(h, sweedler_R(Scalar(1)));
  CoQTStructure cq = dualize_qt(qt);
  const FinBialgebra& d = cq.H;
  SolutionSpace forms = classify_inf_rforms(cq);
  REQUIRE(forms.dim() == 1);
  InfRForm inf = inf_form_from_coords(cq, forms.basis[0]);
  int n = d.dim();
  // Hochschild 2-cocycle:
  // eps(a) chi(b,c) - chi(ab,c) + chi(a,bc) - chi(a,b) eps(c) = 0
  MultiForm chi_ml = mf_precompose_mul(d, inf.chi, 1);  // chi(ab, c)
  MultiForm chi_mr = mf_precompose_mul(d, inf.chi, 2);  // chi(a, bc)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Scalar v = d.counit[a] * mf_value2(inf.chi, b, c) -
                   mf_value(chi_ml, {a, b, c}) + mf_value(chi_mr, {a, b, c}) -
                   mf_value2(inf.chi, a, b) * d.counit[c];
        CHECK(v.is_zero());
      }
  // balanced identity under convolution conjugation
  MultiForm c13 = mf_embed(d, inf.chi, 3, {1, 3});
  MultiForm r12 = mf_embed(d, cq.R, 3, {1, 2});
  MultiForm ri12 = mf_embed(d, cq.R_inv, 3, {1, 2});
  MultiForm r23 = mf_embed(d, cq.R, 3, {2, 3});
  MultiForm ri23 = mf_embed(d, cq.R_inv, 3, {2, 3});
  MultiForm conj12 = convolution_mul(d, ri12, convolution_mul(d, c13, r12));
  MultiForm conj23 = convolution_mul(d, ri23, convolution_mul(d, c13, r23));
  CHECK(mf_eq(conj12, conj23));
  // ... which is exactly chi((a <| b) (x) c) = chi(a (x) (b |> c)) pointwise
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        TensorElement ab = triangle_action_right(cq, b1(d, a), b1(d, b));
        TensorElement bc = triangle_action_left(cq, b1(d, b), b1(d, c));
        Scalar left = mf_pair(inf.chi, concat2(d, ab, b1(d, c)));
        Scalar right = mf_pair(inf.chi, concat2(d, b1(d, a), bc));
        CHECK(left == right);
        CHECK(left == mf_value(conj12, {a, b, c}));
      }
  // infinitesimal quantum Yang-Baxter identity under convolution
  MultiForm x12 = mf_embed(d, inf.chi, 3, {1, 2});
  MultiForm x23 = mf_embed(d, inf.chi, 3, {2, 3});
  MultiForm r13 = mf_embed(d, cq.R, 3, {1, 3});
  auto cm3 = [&](const MultiForm& a, const MultiForm& b, const MultiForm& c) {
    return convolution_mul(d, a, convolution_mul(d, b, c));
  };
  MultiForm lhs = mf_add(mf_add(cm3(x12, r13, r23), cm3(r12, c13, r23)),
                         cm3(r12, r13, x23));
  MultiForm rhs = mf_add(mf_add(cm3(r23, r13, x12), cm3(r23, c13, r12)),
                         cm3(x23, r13, r12));
  CHECK(mf_eq(lhs, rhs));
}

// ==== triangle actions =======================================================

TEST_CASE("triangle actions obey the unit, counit and mixed product laws") {
  FinBialgebra h = sweedler_bialgebra();
  CoQTStructure cq = dualize_qt(make_qt(h, sweedler_R(Scalar(1))));
  const FinBialgebra& d = cq.H;
  int n = d.dim();
  TensorElement unit = te_from_svec(d, d.unit);
  for (int a = 0; a < n; ++a) {
    CHECK(te_eq(triangle_action_right(cq, b1(d, a), unit), b1(d, a)));
    CHECK(te_eq(triangle_action_left(cq, unit, b1(d, a)), b1(d, a)));
    for (int b = 0; b < n; ++b) {
      TensorElement rab = triangle_action_right(cq, b1(d, a), b1(d, b));
      TensorElement lab = triangle_action_left(cq, b1(d, a), b1(d, b));
      // eps(a <| b) = eps(a) eps(b) = eps(a |> b)
      CHECK(eps_of(d, rab) == d.counit[a] * d.counit[b]);
      CHECK(eps_of(d, lab) == d.counit[a] * d.counit[b]);
      for (int c = 0; c < n; ++c) {
        // (a <| b) <| c = a <| (bc)
        TensorElement m_bc = tensor_mul(d, b1(d, b), b1(d, c));
        CHECK(te_eq(triangle_action_right(cq, rab, b1(d, c)),
                    triangle_action_right(cq, b1(d, a), m_bc)));
        // a |> (bc) = (a1 |> b1) ((a2 <| b2) |> c)
        TensorElement want = triangle_action_left(cq, b1(d, a), m_bc);
        TensorElement got = te_zero(d, 1);
        for (const ComulTerm& ta : d.comul[a])
          for (const ComulTerm& tb : d.comul[b]) {
            TensorElement first =
                triangle_action_left(cq, b1(d, ta.j), b1(d, tb.j));
            TensorElement mid =
                triangle_action_right(cq, b1(d, ta.k), b1(d, tb.k));
            TensorElement second = triangle_action_left(cq, mid, b1(d, c));
            got = te_add(got, te_scale(tensor_mul(d, first, second),
                                       ta.c * tb.c));
          }
        CHECK(te_eq(want, got));
        // (ab) <| c = (a <| (b1 |> c1)) (b2 <| c2)
        TensorElement want2 = triangle_action_right(
            cq, tensor_mul(d, b1(d, a), b1(d, b)), b1(d, c));
        TensorElement got2 = te_zero(d, 1);
        for (const ComulTerm& tb : d.comul[b])
          for (const ComulTerm& tc : d.comul[c]) {
            TensorElement inner =
                triangle_action_left(cq, b1(d, tb.j), b1(d, tc.j));
            TensorElement first = triangle_action_right(cq, b1(d, a), inner);
            TensorElement second =
                triangle_action_right(cq, b1(d, tb.k), b1(d, tc.k));
            got2 = te_add(got2, te_scale(tensor_mul(d, first, second),
                                         tb.c * tc.c));
          }
        CHECK(te_eq(want2, got2));
      }
    }
  }
}

// ==== algebra-side cohomology ================================================

TEST_CASE("low-degree cohomology ranks on the algebra side") {
  FinBialgebra h = sweedler_bialgebra();
  CohomologyDims d2 = bar_cohomology_dim(h, 2);
  CHECK(d2.cocycles == 5);
  CHECK(d2.coboundaries == 4);
  CHECK(d2.cohomology == 1);
  CohomologyDims d1 = bar_cohomology_dim(h, 1);
  CHECK(d1.cocycles == 0);
  CHECK(d1.coboundaries == 0);
  CHECK(d1.cohomology == 0);
}

TEST_CASE("the bar differential squares to zero on a form basis") {
  FinBialgebra h = sweedler_bialgebra();
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j) {
      MultiForm f = mf_zero(h, 2);
      mf_accum(f, {i, j}, Scalar(1));
      CHECK(bar_apply(h, bar_apply(h, f)).is_zero());
    }
}

TEST_CASE("algebra cohomology of the dual equals coalgebra cohomology") {
  for (const FinBialgebra& h :
       {sweedler_bialgebra(), group_algebra_z2(), trivial_bialgebra()}) {
    FinBialgebra d = finite_dual(h);
    for (int n : {1, 2}) {
      CohomologyDims lhs = bar_cohomology_dim(d, n);
      CohomologyDims rhs = cohomology_dim(h, n);
      CHECK(lhs.cocycles == rhs.cocycles);
      CHECK(lhs.coboundaries == rhs.coboundaries);
      CHECK(lhs.cohomology == rhs.cohomology);
    }
  }
}

// ==== Casimir form ===========================================================

TEST_CASE("Casimir form of the dual Sweedler structure") {
  FinBialgebra h = sweedler_bialgebra();
  CoQTStructure cq = dualize_qt(make_qt(h, sweedler_R(Scalar(1))));
  SolutionSpace forms = classify_inf_rforms(cq);
  REQUIRE(forms.dim() == 1);
  InfRForm inf = inf_form_from_coords(cq, forms.basis[0]);
  CHECK(casimir_form(inf).is_zero());
  CasimirReport rep = check_casimir_form(inf);
  CHECK(rep.central);
  CHECK(rep.coboundary_sum);
  CHECK_FALSE(rep.coboundary_two);
  // the zero form is a coboundary in both senses
  InfRForm zero{cq, mf_zero(cq.H, 2)};
  CasimirReport zrep = check_casimir_form(zero);
  CHECK(zrep.central);
  CHECK(zrep.coboundary_sum);
  CHECK(zrep.coboundary_two);
}

// ==== antipode identities on the form side ===================================

TEST_CASE("cotriangular antipode identities") {
  FinBialgebra h = sweedler_bialgebra();
  CoQTStructure cq = dualize_qt(make_qt(h, sweedler_R(Scalar(1))));
  const FinBialgebra& d = cq.H;
  SolutionSpace forms = classify_inf_rforms(cq);
  InfRForm inf = inf_form_from_coords(cq, forms.basis[0]);
  int n = d.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // S(a |> b) = S(b) <| S(a)
      TensorElement lhs = apply_antipode_leg(
          d, triangle_action_left(cq, b1(d, a), b1(d, b)), 1);
      TensorElement sa = apply_antipode_leg(d, b1(d, a), 1);
      TensorElement sb = apply_antipode_leg(d, b1(d, b), 1);
      CHECK(te_eq(lhs, triangle_action_right(cq, sb, sa)));
      // chi(S(a1) (x) (a2 |> b)) = -chi(a (x) b)
      Scalar acc(0);
      for (const ComulTerm& t : d.comul[a]) {
        TensorElement s1 = apply_antipode_leg(d, b1(d, t.j), 1);
        TensorElement act = triangle_action_left(cq, b1(d, t.k), b1(d, b));
        acc = acc + t.c * mf_pair(inf.chi, concat2(d, s1, act));
      }
      CHECK(acc == Scalar(0) - mf_value2(inf.chi, a, b));
    }
  // the commutation rule R * chi = chi^op * R singles out the symmetric
  // (Cartier) case, so it must fail here ...
  CHECK_FALSE(check_form_cc4(inf));
  // ... and so must the coincidence chi(S(b) (x) S(a)) = chi(a (x) b)
  bool broken_somewhere = false;
  for (int a = 0; a < n && !broken_somewhere; ++a)
    for (int b = 0; b < n && !broken_somewhere; ++b) {
      TensorElement sa = apply_antipode_leg(d, b1(d, a), 1);
      TensorElement sb = apply_antipode_leg(d, b1(d, b), 1);
      if (mf_pair(inf.chi, concat2(d, sb, sa)) != mf_value2(inf.chi, a, b))
        broken_somewhere = true;
    }
  CHECK(broken_somewhere);
}

// ==== double dual ============================================================

TEST_CASE("dualizing twice recovers identical coefficients") {
  FinBialgebra h = sweedler_bialgebra();
  for (long lam : {1L, 2L}) {
    QTStructure qt = make_qt(h, sweedler_R(Scalar(lam)));
    InfRMatrix inf{qt, sweedler_chi(Scalar(3))};
    REQUIRE(check_inf_rmatrix(inf).all_pass());
    InfRForm dual = dualize_inf(inf);
    CHECK(check_inf_rform(dual).all_pass());
    InfRMatrix back = dualize_form_to_element(dual);
    CHECK(back.qt.R.c == qt.R.c);
    CHECK(back.qt.R_inv.c == qt.R_inv.c);
    CHECK(back.chi.c == inf.chi.c);
    CHECK(check_inf_rmatrix(back).all_pass());
    // and the bare structure round trip
    QTStructure back_qt = dualize_coqt_to_qt(dualize_qt(qt));
    CHECK(back_qt.R.c == qt.R.c);
  }
}

TEST_CASE("the dual of the dual bialgebra has the original tables") {
  FinBialgebra h = sweedler_bialgebra();
  FinBialgebra dd = finite_dual(finite_dual(h));
  REQUIRE(dd.dim() == h.dim());
  for (int i = 0; i < h.dim(); ++i) {
    for (int j = 0; j < h.dim(); ++j)
      CHECK(svec_eq(dd.mul_at(i, j), h.mul_at(i, j)));
    CHECK(dd.counit[i] == h.counit[i]);
    TensorElement ca = te_zero(h, 2), cb = te_zero(h, 2);
    for (const ComulTerm& t : dd.comul[i]) te_accum(ca, {t.j, t.k}, t.c);
    for (const ComulTerm& t : h.comul[i]) te_accum(cb, {t.j, t.k}, t.c);
    CHECK(te_eq(ca, cb));
    CHECK(svec_eq(antipode_vec(dd, {{i, Scalar(1)}}),
                  antipode_vec(h, {{i, Scalar(1)}})));
  }
  CHECK(svec_eq(dd.unit, h.unit));
  CHECK(validate_bialgebra(dd).all_pass());
}

TEST_CASE("forms without a convolution inverse are refused") {
  FinBialgebra h = sweedler_bialgebra();
  try {
    make_coqt(h, mf_zero(h, 2));
    FAIL("expected NotConvInvertible");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::NotConvInvertible);
  }
}
