#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ibraid/constructions.hpp"
#include "ibraid/twist.hpp"

using namespace ibraid;

namespace {

// comultiplication table of one basis element as an order-2 tensor
TensorElement comul_te(const FinBialgebra& h, int i) {
  TensorElement a = te_zero(h, 2);
  for (const ComulTerm& t : h.comul[i]) te_accum(a, {t.j, t.k}, t.c);
  return a;
}

bool same_comul(const FinBialgebra& a, const FinBialgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (!te_eq(comul_te(a, i), comul_te(b, i))) return false;
  return true;
}

}  // namespace

// ==== twist axioms ===========================================================

TEST_CASE("the unipotent family consists of twists") {
  FinBialgebra h = sweedler_bialgebra();
  for (long t : {0L, 1L, 2L, -3L}) {
    AxiomReport rep = check_twist(h, sweedler_twist(Scalar(t)));
    CHECK(rep.all_pass());
  }
}

TEST_CASE("non-twists are reported row by row") {
  FinBialgebra h = sweedler_bialgebra();
  {
    AxiomReport rep = check_twist(h, te_basis(h, {1, 1}));  // g (x) g
    CHECK(rep.find("invertible")->pass);
    CHECK_FALSE(rep.find("2-cocycle")->pass);
    CHECK_FALSE(rep.find("normalized")->pass);
    CHECK_FALSE(rep.find("normalized")->witness.empty());
    CHECK_THROWS_AS(make_twist(h, te_basis(h, {1, 1})), Error);
  }
  {
    TensorElement f = te_basis(h, {0, 0});
    te_accum(f, {2, 2}, Scalar(1));  // 1(x)1 + x(x)x: normalized but no cocycle
    AxiomReport rep = check_twist(h, f);
    CHECK(rep.find("invertible")->pass);
    CHECK_FALSE(rep.find("2-cocycle")->pass);
    CHECK(rep.find("normalized")->pass);
  }
}

// ==== twisting the Sweedler family ==========================================

TEST_CASE("the twist grid preserves every structure level") {
  FinBialgebra h = sweedler_bialgebra();
  for (long lam : {0L, 1L, 2L})
    for (long alp : {0L, 1L, 2L})
      for (long t : {0L, 1L, 2L}) {
        CAPTURE(lam);
        CAPTURE(alp);
        CAPTURE(t);
        QTStructure qt = make_qt(h, sweedler_R(Scalar(lam)));
        InfRMatrix inf{qt, sweedler_chi(Scalar(alp))};
        DrinfeldTwist tw = make_twist(h, sweedler_twist(Scalar(t)));

        FinBialgebra hf = twist_bialgebra(tw);
        CHECK(validate_bialgebra(hf).all_pass());

        QTStructure qtf = twist_qt(tw, qt);
        CHECK(qt_axioms_pass(check_quasitriangular(qtf.H, qtf.R)));
        CHECK(qt_is_triangular(qtf));

        // R_F = R + (t/2) (x(x)xg + x(x)x + xg(x)xg - xg(x)x)
        TensorElement want = sweedler_R(Scalar(lam));
        Scalar half_t = Scalar(t) / Scalar(2);
        te_accum(want, {2, 3}, half_t);
        te_accum(want, {2, 2}, half_t);
        te_accum(want, {3, 3}, half_t);
        te_accum(want, {3, 2}, Scalar(0) - half_t);
        CHECK(te_eq(qtf.R, want));

        // chi is untouched by this twist family
        InfRMatrix inff = twist_inf(tw, inf);
        CHECK(check_inf_rmatrix(inff).all_pass());
        CHECK(te_eq(inff.chi, inf.chi));

        // commutation behaviour survives conjugation
        CHECK(check_cartier(inff) == check_cartier(inf));
        CHECK(check_q_commutation(inff, Scalar(-1)));
      }
}

TEST_CASE("twisting by the R-matrix itself flips the structure") {
  FinBialgebra h = sweedler_bialgebra();
  for (long lam : {1L, 2L}) {
    QTStructure qt = make_qt(h, sweedler_R(Scalar(lam)));
    DrinfeldTwist tw = make_twist(h, qt.R);

    // Delta_F = Delta^op on every basis element
    FinBialgebra hf = twist_bialgebra(tw);
    for (int i = 0; i < h.dim(); ++i)
      CHECK(te_eq(comul_te(hf, i), flip_op(comul_te(h, i))));

    // R_F = R^op
    QTStructure qtf = twist_qt(tw, qt);
    CHECK(te_eq(qtf.R, flip_op(qt.R)));

    // chi_F = -chi^op = -alpha x (x) xg
    for (long alp : {1L, 2L}) {
      InfRMatrix inf{qt, sweedler_chi(Scalar(alp))};
      InfRMatrix inff = twist_inf(tw, inf);
      CHECK(te_eq(inff.chi, te_scale(flip_op(inf.chi), Scalar(-1))));
      TensorElement want = te_zero(h, 2);
      te_accum(want, {2, 3}, Scalar(-alp));
      CHECK(te_eq(inff.chi, want));
      CHECK(check_inf_rmatrix(inff).all_pass());
    }
  }
}

TEST_CASE("a twist followed by its inverse restores everything exactly") {
  FinBialgebra h = sweedler_bialgebra();
  QTStructure qt = make_qt(h, sweedler_R(Scalar(2)));
  InfRMatrix inf{qt, sweedler_chi(Scalar(3))};

  DrinfeldTwist fwd = make_twist(h, sweedler_twist(Scalar(5)));
  FinBialgebra h2 = twist_bialgebra(fwd);
  QTStructure qt2 = twist_qt(fwd, qt);
  InfRMatrix inf2 = twist_inf(fwd, inf);

  DrinfeldTwist bwd = make_twist(h2, fwd.F_inv);
  FinBialgebra h3 = twist_bialgebra(bwd);
  CHECK(same_comul(h3, h));
  for (int i = 0; i < h.dim(); ++i)
    CHECK(svec_eq(antipode_vec(h3, {{i, Scalar(1)}}),
                  antipode_vec(h, {{i, Scalar(1)}})));

  QTStructure qt3 = twist_qt(bwd, qt2);
  CHECK(te_eq(qt3.R, qt.R));
  CHECK(te_eq(qt3.R_inv, qt.R_inv));

  InfRMatrix inf3 = twist_inf(bwd, inf2);
  CHECK(te_eq(inf3.chi, inf.chi));
}

// ==== formal deformation =====================================================

TEST_CASE("first-order deformations are quasitriangular over the jet ring") {
  FinBialgebra h = sweedler_bialgebra();
  FinBialgebra hl = lift_bialgebra(h, field_truncated(3, "h"));
  for (long lam : {0L, 1L, 2L})
    for (long alp : {0L, 1L, 2L}) {
      CAPTURE(lam);
      CAPTURE(alp);
      QTStructure qt = make_qt(h, sweedler_R(Scalar(lam)));
      TensorElement chi = sweedler_chi(Scalar(alp));
      TensorElement rt = hbar_deform(qt, chi, 3);
      AxiomReport rep = check_hbar_quasitriangular(hl, rt);
      CHECK(qt_axioms_pass(rep));
      CHECK(rep.find("triangular")->pass);

      // splitting the deformation recovers the input pair on the nose
      FirstOrderData fo = extract_first_order(h, rt);
      CHECK(te_eq(fo.R, qt.R));
      CHECK(te_eq(fo.chi, chi));
      InfRMatrix back{make_qt(h, fo.R), fo.chi};
      CHECK(check_inf_rmatrix(back).all_pass());
    }
}

TEST_CASE("deformations at different truncation orders agree slice by slice") {
  FinBialgebra h = sweedler_bialgebra();
  QTStructure qt = make_qt(h, sweedler_R(Scalar(1)));
  TensorElement chi = sweedler_chi(Scalar(2));
  TensorElement r3 = hbar_deform(qt, chi, 3);
  TensorElement r5 = hbar_deform(qt, chi, 5);
  for (int k = 0; k < 3; ++k)
    CHECK(te_eq(te_jet_slice(r3, k), te_jet_slice(r5, k)));
}

TEST_CASE("perturbed deformations fail the named axiom rows") {
  FinBialgebra h = sweedler_bialgebra();
  FinBialgebra hl = lift_bialgebra(h, field_truncated(3, "h"));
  QTStructure qt = make_qt(h, sweedler_R(Scalar(1)));
  TensorElement rt = hbar_deform(qt, sweedler_chi(Scalar(1)), 3);
  {
    TensorElement bad = rt;
    te_accum(bad, {1, 1}, Scalar::make_jet({0, 1, 0}));  // + hbar g(x)g
    AxiomReport rep = check_hbar_quasitriangular(hl, bad);
    CHECK_FALSE(qt_axioms_pass(rep));
    CHECK_FALSE(rep.find("braided-comul")->pass);
    CHECK_FALSE(rep.find("hexagon-1")->pass);
    CHECK_FALSE(rep.find("hexagon-2")->pass);
    CHECK_FALSE(rep.find("qyb")->pass);
    CHECK_FALSE(rep.find("braided-comul")->witness.empty());
  }
  {
    TensorElement bad = rt;
    te_accum(bad, {2, 2}, Scalar::make_jet({0, 0, 1}));  // + hbar^2 x(x)x
    AxiomReport rep = check_hbar_quasitriangular(hl, bad);
    CHECK_FALSE(qt_axioms_pass(rep));
    CHECK(rep.find("braided-comul")->pass);
    CHECK(rep.find("qyb")->pass);
    CHECK_FALSE(rep.find("hexagon-1")->pass);
    CHECK_FALSE(rep.find("hexagon-2")->pass);
  }
}

TEST_CASE("deformation input contracts") {
  FinBialgebra h = sweedler_bialgebra();
  QTStructure qt = make_qt(h, sweedler_R(Scalar(1)));
  TensorElement chi = sweedler_chi(Scalar(1));
  // truncation order must leave room for the first-order term
  CHECK_THROWS_AS(hbar_deform(qt, chi, 1), Error);
  // the axiom check insists on a jet-valued bialgebra
  TensorElement rt = hbar_deform(qt, chi, 3);
  try {
    check_hbar_quasitriangular(h, rt);
    FAIL("expected Input");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::Input);
  }
  // splitting insists on a rational-valued bialgebra
  FinBialgebra hl = lift_bialgebra(h, field_truncated(3, "h"));
  CHECK_THROWS_AS(extract_first_order(hl, rt), Error);
  // a deformation with singular leading term cannot be split
  TensorElement sing = te_zero(hl, 2);
  te_accum(sing, {0, 0}, Scalar::make_jet({0, 1, 0}));  // hbar 1(x)1
  try {
    extract_first_order(h, sing);
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::NotInvertible);
  }
}
