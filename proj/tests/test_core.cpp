#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ibraid/constructions.hpp"
#include "ibraid/linalg.hpp"
#include "ibraid/scalar.hpp"
#include "ibraid/tensor.hpp"

using namespace ibraid;

namespace {

std::mt19937_64 rng(0x5eed0001);

mpq_class rand_rat() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Scalar rand_scalar(const Field& f) {
  if (f.kind == FieldKind::Rational) return Scalar(rand_rat());
  if (f.kind == FieldKind::RationalFunction) {
    std::uniform_int_distribution<int> deg(0, 3);
    Poly num, den;
    int dn = deg(rng), dd = deg(rng);
    for (int i = 0; i <= dn; ++i) num.c.push_back(rand_rat());
    for (int i = 0; i <= dd; ++i) den.c.push_back(rand_rat());
    num.trim();
    den.trim();
    if (den.is_zero()) den = poly_const(1);
    return Scalar::make_ratfun(num, den);
  }
  std::vector<mpq_class> c;
  for (int i = 0; i < f.trunc; ++i) c.push_back(rand_rat());
  return Scalar::make_jet(std::move(c));
}

TensorElement rand_te(const FinBialgebra& h, int order, int nterms) {
  TensorElement t = te_zero(h, order);
  std::uniform_int_distribution<int> idx(0, h.dim() - 1);
  for (int k = 0; k < nterms; ++k) {
    std::vector<int> key(order);
    for (int& v : key) v = idx(rng);
    te_accum(t, key, Scalar(rand_rat()));
  }
  return t;
}

MultiForm rand_mf(const FinBialgebra& h, int order, int nterms) {
  MultiForm f = mf_zero(h, order);
  std::uniform_int_distribution<int> idx(0, h.dim() - 1);
  for (int k = 0; k < nterms; ++k) {
    std::vector<int> key(order);
    for (int& v : key) v = idx(rng);
    mf_accum(f, key, Scalar(rand_rat()));
  }
  return f;
}

// dense Gaussian elimination rank over Q, no pivoting tricks; the naive oracle
int dense_rank(std::vector<std::vector<mpq_class>> m) {
  int rows = (int)m.size();
  if (rows == 0) return 0;
  int cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    mpq_class inv = 1 / m[rank][c];
    for (int cc = c; cc < cols; ++cc) m[rank][cc] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

// ==== scalar arithmetic ======================================================

TEST_CASE("rational scalar basics") {
  Field f = field_rationals();
  Scalar a(3), b = Scalar::from_rat(mpq_class(1, 2), f);
  CHECK((a + b) == Scalar::from_rat(mpq_class(7, 2), f));
  CHECK((a * b) == Scalar::from_rat(mpq_class(3, 2), f));
  CHECK((a - a).is_zero());
  CHECK((b / b).is_one());
  CHECK(Scalar(0).is_zero());
  CHECK_FALSE(Scalar(0).is_unit());
  CHECK_THROWS_AS(Scalar(0).inverse(), Error);
  CHECK(pow_scalar(Scalar(2), 10) == Scalar(1024));
  CHECK(pow_scalar(Scalar(2), -2) == Scalar::from_rat(mpq_class(1, 4), f));
}

TEST_CASE("rational function scalars reduce") {
  Field f = field_rational_functions("s");
  Scalar s = Scalar::variable(f);
  Scalar num = s * s - Scalar(1);
  Scalar q = num / (s - Scalar(1));
  CHECK(q == s + Scalar(1));  // (s^2-1)/(s-1) = s+1
  CHECK((s / s).is_one());
  CHECK(s.is_unit());
  CHECK((s * s.inverse()).is_one());
  CHECK_FALSE((s - s).is_unit());
  // mixed-kind promotion: plain rationals embed
  CHECK(Scalar(2) * s + Scalar(1) == parse_scalar("2*s + 1", f));
}

TEST_CASE("truncated polynomial scalars") {
  Field f = field_truncated(3, "h");
  Scalar h = Scalar::variable(f);
  Scalar one = Scalar::one(f);
  CHECK((h * h * h).is_zero());             // h^3 = 0
  CHECK((one + h) * (one - h) == one - h * h);
  CHECK((one + h).is_unit());
  CHECK((one + h).inverse() == one - h + h * h);
  CHECK_FALSE(h.is_unit());
  CHECK_THROWS_AS(h.inverse(), Error);
  CHECK(Scalar::make_jet({mpq_class(1), mpq_class(-1), mpq_class(1)}) ==
        (one + h).inverse());
}

TEST_CASE("scalar kind mismatch is rejected") {
  Field fs = field_rational_functions("s");
  Field fh = field_truncated(3, "h");
  Scalar s = Scalar::variable(fs), h = Scalar::variable(fh);
  CHECK_THROWS_AS(s + h, Error);
}

// ==== rendering and parsing ==================================================

TEST_CASE("parse/render round trip on fixed strings") {
  Field fq = field_rationals();
  Field fs = field_rational_functions("s");
  Field fh = field_truncated(4, "h");
  for (const char* t : {"0", "1", "-1", "3/2", "-7/3"}) {
    Scalar v = parse_scalar(t, fq);
    CHECK(parse_scalar(scalar_str(v, fq), fq) == v);
  }
  for (const char* t : {"s", "s^-1", "(s^2 - 1)/(s^2 + 1)", "s^2 - s^-2",
                        "1/2*s + 3", "(s - 1)^2"}) {
    Scalar v = parse_scalar(t, fs);
    CHECK(parse_scalar(scalar_str(v, fs), fs) == v);
  }
  for (const char* t : {"1 + 2*h", "h^2", "1/2 - 1/2*h", "1 - h + h^3"}) {
    Scalar v = parse_scalar(t, fh);
    CHECK(parse_scalar(scalar_str(v, fh), fh) == v);
  }
}

TEST_CASE("parse/render round trip on random scalars") {
  for (const Field& f : {field_rationals(), field_rational_functions("s"),
                         field_truncated(3, "h")}) {
    for (int i = 0; i < 100; ++i) {
      Scalar v = rand_scalar(f);
      CHECK(parse_scalar(scalar_str(v, f), f) == v);
    }
  }
}

TEST_CASE("parser rejects malformed input") {
  Field fq = field_rationals();
  Field fs = field_rational_functions("s");
  CHECK_THROWS_AS(parse_scalar("1/0", fq), Error);
  CHECK_THROWS_AS(parse_scalar("s", fq), Error);   // unknown symbol over Q
  CHECK_THROWS_AS(parse_scalar("2^", fs), Error);
  CHECK_THROWS_AS(parse_scalar("(1", fs), Error);
  CHECK_THROWS_AS(parse_scalar("", fq), Error);
  CHECK_THROWS_AS(parse_scalar("1/(s - s)", fs), Error);
}

// ==== substitution oracle: Q(s) arithmetic vs Q arithmetic ==================

TEST_CASE("rational function ops agree with rational ops at 20 points") {
  Field fs = field_rational_functions("s");
  std::uniform_int_distribution<int> op(0, 3);
  int checked = 0;
  while (checked < 20) {
    mpq_class pt = rand_rat();
    Scalar a = rand_scalar(fs), b = rand_scalar(fs);
    mpq_class av, bv;
    try {
      av = rf_at(a, pt);
      bv = rf_at(b, pt);
    } catch (const Error&) {
      continue;  // denominator vanished at the point; draw again
    }
    int o = op(rng);
    Scalar c;
    mpq_class cv;
    if (o == 0) { c = a + b; cv = av + bv; }
    else if (o == 1) { c = a - b; cv = av - bv; }
    else if (o == 2) { c = a * b; cv = av * bv; }
    else {
      if (b.is_zero() || bv == 0) continue;
      c = a / b;
      cv = av / bv;
    }
    try {
      CHECK(rf_at(c, pt) == cv);
    } catch (const Error&) {
      continue;  // result denominator vanished; draw again
    }
    ++checked;
  }
}

// ==== echelon and nullspace ==================================================

TEST_CASE("nullspace vs dense elimination oracle") {
  std::uniform_int_distribution<int> dims(1, 12), terms(0, 5);
  for (int iter = 0; iter < 60; ++iter) {
    int ncols = dims(rng);
    int nrows = dims(rng);
    std::vector<SRow> rows(nrows);
    std::vector<std::vector<mpq_class>> dense(nrows,
                                              std::vector<mpq_class>(ncols, 0));
    std::uniform_int_distribution<int> col(0, ncols - 1);
    for (int r = 0; r < nrows; ++r) {
      int t = terms(rng);
      for (int k = 0; k < t; ++k) {
        int c = col(rng);
        mpq_class v = rand_rat();
        dense[r][c] += v;
        Scalar cur = rows[r].count(c) ? rows[r][c] : Scalar(0);
        cur = cur + Scalar(v);
        if (cur.is_zero()) rows[r].erase(c);
        else rows[r][c] = cur;
      }
    }
    SolutionSpace sp = nullspace(ncols, rows);
    CHECK(sp.dim() == ncols - dense_rank(dense));
    // each basis vector satisfies every row exactly
    for (const SRow& b : sp.basis) {
      for (const SRow& row : rows) {
        Scalar dot(0);
        for (const auto& [c, v] : row) {
          auto it = b.find(c);
          if (it != b.end()) dot = dot + v * it->second;
        }
        CHECK(dot.is_zero());
      }
      CHECK(sp.contains(b));
    }
    // canonical form: leading coefficient one, pivots strictly increasing
    int last_pivot = -1;
    for (const SRow& b : sp.basis) {
      REQUIRE_FALSE(b.empty());
      CHECK(b.begin()->second.is_one());
      CHECK(b.begin()->first > last_pivot);
      last_pivot = b.begin()->first;
    }
  }
}

TEST_CASE("echelon insert/reduce bookkeeping") {
  Echelon e(4);
  CHECK(e.insert({{0, Scalar(1)}, {1, Scalar(2)}}));
  CHECK(e.insert({{1, Scalar(1)}}));
  CHECK_FALSE(e.insert({{0, Scalar(3)}, {1, Scalar(6)}}));  // dependent
  CHECK(e.rank() == 2);
  SRow v{{0, Scalar(5)}, {1, Scalar(7)}, {3, Scalar(1)}};
  e.reduce(v);
  CHECK(v.count(0) == 0);
  CHECK(v.count(1) == 0);
  CHECK(v.count(3) == 1);
  CHECK(e.pivots() == std::vector<int>{0, 1});
  CHECK(e.free_cols() == std::vector<int>{2, 3});
}

TEST_CASE("solve_unit_pivot over jets needs an invertible pivot") {
  Field f = field_truncated(2, "h");
  Scalar h = Scalar::variable(f), one = Scalar::one(f);
  // [h 1; 1 0] x = [1; 1] forces pivoting past the non-unit h
  std::vector<std::vector<Scalar>> a{{h, one}, {one, Scalar::zero(f)}};
  std::vector<Scalar> b{one, one};
  auto x = solve_unit_pivot(a, b);
  CHECK(x[0] == one);
  CHECK(x[1] == one - h);
  std::vector<std::vector<Scalar>> sing{{h, h}, {h, h}};
  CHECK_THROWS_AS(solve_unit_pivot(sing, b), Error);
}

// ==== bialgebra validation ===================================================

TEST_CASE("builtin bialgebras satisfy every axiom") {
  for (const FinBialgebra& h :
       {sweedler_bialgebra(), group_algebra_z2(), trivial_bialgebra()}) {
    AxiomReport rep = validate_bialgebra(h);
    CHECK(rep.all_pass());
    CHECK(rep.find("antipode") != nullptr);
  }
}

TEST_CASE("validate_bialgebra reports the broken axiom with a witness") {
  FinBialgebra h = sweedler_bialgebra();
  h.mul[1 * 4 + 1] = SVec{{1, Scalar(1)}};  // g*g = g instead of 1
  AxiomReport rep = validate_bialgebra(h);
  const AxiomResult* anti = rep.find("antipode");
  REQUIRE(anti != nullptr);
  CHECK_FALSE(anti->pass);
  CHECK_FALSE(anti->witness.empty());

  FinBialgebra h2 = sweedler_bialgebra();
  h2.comul[2] = {{2, 0, Scalar(1)}};  // drop the g (x) x term of Delta(x)
  AxiomReport rep2 = validate_bialgebra(h2);
  const AxiomResult* cu = rep2.find("counitality");
  REQUIRE(cu != nullptr);
  CHECK_FALSE(cu->pass);
}

TEST_CASE("check_wellformed catches structural damage") {
  FinBialgebra h = sweedler_bialgebra();
  h.counit.pop_back();
  CHECK_THROWS_AS(check_wellformed(h), Error);
  FinBialgebra h2 = sweedler_bialgebra();
  h2.mul[0].push_back({7, Scalar(1)});  // index out of range
  CHECK_THROWS_AS(check_wellformed(h2), Error);
}

// ==== tensor algebra =========================================================

TEST_CASE("tensor_mul is associative and unital on random draws") {
  FinBialgebra h = sweedler_bialgebra();
  TensorElement unit = te_unit(h, 2);
  for (int i = 0; i < 100; ++i) {
    TensorElement a = rand_te(h, 2, 3), b = rand_te(h, 2, 3), c = rand_te(h, 2, 3);
    CHECK(te_eq(tensor_mul(h, tensor_mul(h, a, b), c),
                tensor_mul(h, a, tensor_mul(h, b, c))));
    CHECK(te_eq(tensor_mul(h, unit, a), a));
    CHECK(te_eq(tensor_mul(h, a, unit), a));
  }
}

TEST_CASE("tensor inverse is two-sided when it exists") {
  FinBialgebra h = sweedler_bialgebra();
  TensorElement unit = te_unit(h, 2);
  for (long lam : {0L, 1L, 2L}) {
    TensorElement r = sweedler_R(Scalar(lam));
    TensorElement rinv = invert_in_tensor_algebra(h, r);
    CHECK(te_eq(tensor_mul(h, r, rinv), unit));
    CHECK(te_eq(tensor_mul(h, rinv, r), unit));
  }
  // unit plus nilpotent is always invertible
  TensorElement a = te_unit(h, 2);
  te_accum(a, {2, 1}, Scalar(5));  // x (x) g
  TensorElement ainv = invert_in_tensor_algebra(h, a);
  CHECK(te_eq(tensor_mul(h, a, ainv), unit));
  CHECK_THROWS_AS(invert_in_tensor_algebra(h, te_zero(h, 2)), Error);
}

TEST_CASE("leg plumbing identities") {
  FinBialgebra h = sweedler_bialgebra();
  TensorElement chi = sweedler_chi(Scalar(1));
  CHECK(te_eq(flip_op(flip_op(chi)), chi));
  // embedding into legs (1,3) of three then permuting back
  TensorElement e13 = leg_embed(h, chi, 3, {1, 3});
  CHECK(te_coeff(e13, {3, 0, 2}) == Scalar(1));
  TensorElement p = leg_permute(e13, {0, 2, 1});
  CHECK(te_coeff(p, {3, 2, 0}) == Scalar(1));
  // counit contraction undoes a unit leg
  CHECK(te_eq(apply_counit_leg(h, leg_embed(h, chi, 3, {1, 2}), 3), chi));
  // coproduct on a leg matches the structure constants
  TensorElement dx = apply_coproduct_leg(h, te_basis(h, {2}), 1);
  TensorElement want = te_zero(h, 2);
  te_accum(want, {2, 0}, Scalar(1));
  te_accum(want, {1, 2}, Scalar(1));
  CHECK(te_eq(dx, want));
}

TEST_CASE("jet lift and slice round trip") {
  FinBialgebra h = sweedler_bialgebra();
  Field jets = field_truncated(3, "h");
  TensorElement chi = sweedler_chi(Scalar(2));
  TensorElement lifted = te_lift(chi, jets);
  CHECK(te_eq(te_jet_slice(lifted, 0), chi));
  CHECK(te_jet_slice(lifted, 1).is_zero());
  TensorElement scaled = te_scale(lifted, Scalar::variable(jets));
  CHECK(te_jet_slice(scaled, 0).is_zero());
  CHECK(te_eq(te_jet_slice(scaled, 1), chi));
}

// ==== convolution algebra of forms ===========================================

TEST_CASE("convolution is associative with counit unit") {
  FinBialgebra h = sweedler_bialgebra();
  MultiForm eps = mf_counit(h, 2);
  for (int i = 0; i < 100; ++i) {
    MultiForm a = rand_mf(h, 2, 4), b = rand_mf(h, 2, 4), c = rand_mf(h, 2, 4);
    CHECK(mf_eq(convolution_mul(h, convolution_mul(h, a, b), c),
                convolution_mul(h, a, convolution_mul(h, b, c))));
    CHECK(mf_eq(convolution_mul(h, eps, a), a));
    CHECK(mf_eq(convolution_mul(h, a, eps), a));
  }
}

TEST_CASE("convolution inverse is two-sided") {
  FinBialgebra h = sweedler_bialgebra();
  MultiForm eps = mf_counit(h, 2);
  CHECK(mf_eq(convolution_invert(h, eps), eps));
  // a unipotent form: eps + delta_{xg,x}
  MultiForm f = mf_counit(h, 2);
  mf_accum(f, {3, 2}, Scalar(7));
  MultiForm finv = convolution_invert(h, f);
  CHECK(mf_eq(convolution_mul(h, f, finv), eps));
  CHECK(mf_eq(convolution_mul(h, finv, f), eps));
  CHECK_THROWS_AS(convolution_invert(h, mf_zero(h, 2)), Error);
}

// ==== element helpers ========================================================

TEST_CASE("mul/antipode/counit vector helpers follow the tables") {
  FinBialgebra h = sweedler_bialgebra();
  SVec g{{1, Scalar(1)}}, x{{2, Scalar(1)}}, xg{{3, Scalar(1)}};
  CHECK(svec_eq(mul_vec(h, g, x), SVec{{3, Scalar(-1)}}));  // g x = -xg
  CHECK(svec_eq(mul_vec(h, x, g), xg));
  CHECK(mul_vec(h, x, x).empty());
  CHECK(svec_eq(antipode_vec(h, g), g));
  CHECK(svec_eq(antipode_vec(h, x), xg));  // S(x) = -gx = xg
  CHECK(counit_vec(h, g) == Scalar(1));
  CHECK(counit_vec(h, x).is_zero());
}

TEST_CASE("lift_bialgebra carries every table into the new field") {
  FinBialgebra h = sweedler_bialgebra();
  Field jets = field_truncated(3, "h");
  FinBialgebra hl = lift_bialgebra(h, jets);
  CHECK(hl.field == jets);
  CHECK(validate_bialgebra(hl).all_pass());
}
