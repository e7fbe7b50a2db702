#include "ibraid/coquasitri.hpp"

#include <sstream>

namespace ibraid {

namespace {

std::string tuple_label(const FinBialgebra& h, const std::vector<int>& key) {
  std::string lbl;
  for (size_t i = 0; i < key.size(); ++i) {
    if (i) lbl += "⊗";
    lbl += h.basis[key[i]];
  }
  return lbl;
}

std::string form_witness(const FinBialgebra& h, const MultiForm& lhs,
                         const MultiForm& rhs) {
  MultiForm d = mf_sub(lhs, rhs);
  if (d.is_zero()) return "";
  const auto& key = d.c.begin()->first;
  std::ostringstream os;
  os << "at " << tuple_label(h, key) << ": lhs = "
     << scalar_str(mf_value(lhs, key), h.field)
     << ", rhs = " << scalar_str(mf_value(rhs, key), h.field);
  return os.str();
}

void push_form_axiom(AxiomReport& rep, const std::string& name,
                     const FinBialgebra& h, const MultiForm& lhs,
                     const MultiForm& rhs) {
  AxiomResult r{name, true, ""};
  if (!mf_eq(lhs, rhs)) {
    r.pass = false;
    r.witness = form_witness(h, lhs, rhs);
  }
  rep.axioms.push_back(std::move(r));
}

MultiForm mf13(const FinBialgebra& h, const MultiForm& f) {
  return mf_embed(h, f, 3, {1, 3});
}
MultiForm mf12(const FinBialgebra& h, const MultiForm& f) {
  return mf_embed(h, f, 3, {1, 2});
}
MultiForm mf23(const FinBialgebra& h, const MultiForm& f) {
  return mf_embed(h, f, 3, {2, 3});
}

MultiForm conv3(const FinBialgebra& h, const MultiForm& a, const MultiForm& b,
                const MultiForm& c) {
  return convolution_mul(h, convolution_mul(h, a, b), c);
}

std::string svec_str(const FinBialgebra& h, const SVec& v) {
  TensorElement t = te_zero(h, 1);
  for (const auto& [i, c] : v) te_accum(t, {i}, c);
  return te_str(h, t);
}

// chi(a1, b1) a2 b2 and a1 b1 chi(a2, b2) for basis pair (a, b); `opp` flips
// the product order on the right-hand side (the R-form axiom uses b1 a1)
void braided_mul_sides(const FinBialgebra& h, const MultiForm& f, int a, int b,
                       bool opp, SVec& lhs, SVec& rhs) {
  std::map<int, Scalar> accl, accr;
  for (const auto& t1 : h.comul[a])
    for (const auto& t2 : h.comul[b]) {
      Scalar c = t1.c * t2.c;
      Scalar fl = f.c.count({t1.j, t2.j}) ? mf_value2(f, t1.j, t2.j) : Scalar(0);
      if (!fl.is_zero())
        for (const auto& [r, mc] : h.mul_at(t1.k, t2.k)) {
          Scalar v = c * fl * mc;
          if (!v.is_zero()) accl[r] = accl.count(r) ? accl[r] + v : v;
        }
      Scalar fr = f.c.count({t1.k, t2.k}) ? mf_value2(f, t1.k, t2.k) : Scalar(0);
      if (!fr.is_zero()) {
        const SVec& m = opp ? h.mul_at(t2.j, t1.j) : h.mul_at(t1.j, t2.j);
        for (const auto& [r, mc] : m) {
          Scalar v = c * fr * mc;
          if (!v.is_zero()) accr[r] = accr.count(r) ? accr[r] + v : v;
        }
      }
    }
  lhs.clear();
  rhs.clear();
  for (auto& [i, c] : accl)
    if (!c.is_zero()) lhs.emplace_back(i, c);
  for (auto& [i, c] : accr)
    if (!c.is_zero()) rhs.emplace_back(i, c);
}

// chi(1, e_a) and chi(e_a, 1) as order-1 forms
MultiForm unit_slot_form(const FinBialgebra& h, const MultiForm& f, int slot) {
  MultiForm g = mf_zero(h, 1);
  for (int a = 0; a < h.dim(); ++a) {
    Scalar acc(0);
    for (const auto& [u, cu] : h.unit)
      acc = acc + cu * (slot == 1 ? mf_value2(f, u, a) : mf_value2(f, a, u));
    if (!acc.is_zero()) g.c.emplace(std::vector<int>{a}, acc);
  }
  return g;
}

}  // namespace

// ==== coquasitriangular checks ==============================================

CoQTStructure make_coqt(const FinBialgebra& h, const MultiForm& r) {
  if (r.order != 2) fail(Err::Input, "universal form must have order 2");
  return CoQTStructure{h, r, convolution_invert(h, r)};
}

bool coqt_is_cotriangular(const CoQTStructure& cq) {
  return mf_eq(mf_flip(cq.R), cq.R_inv);
}

bool coqt_axioms_pass(const AxiomReport& rep) {
  for (const auto& r : rep.axioms)
    if (!r.pass && r.axiom != "cotriangular") return false;
  return true;
}

AxiomReport check_coquasitriangular(const FinBialgebra& h, const MultiForm& r) {
  AxiomReport rep;
  bool invertible = true;
  try {
    convolution_invert(h, r);
  } catch (const Error&) {
    invertible = false;
  }
  rep.axioms.push_back(
      {"conv-invertible", invertible, invertible ? "" : "R has no convolution inverse"});

  {
    AxiomResult res{"braided-mul", true, ""};
    for (int a = 0; a < h.dim() && res.pass; ++a)
      for (int b = 0; b < h.dim() && res.pass; ++b) {
        SVec lhs, rhs;
        braided_mul_sides(h, r, a, b, true, lhs, rhs);
        if (!svec_eq(lhs, rhs)) {
          res.pass = false;
          res.witness = "at " + h.basis[a] + "⊗" + h.basis[b] + ": lhs = " +
                        svec_str(h, lhs) + ", rhs = " + svec_str(h, rhs);
        }
      }
    rep.axioms.push_back(std::move(res));
  }

  MultiForm r13 = mf13(h, r), r12 = mf12(h, r), r23 = mf23(h, r);
  push_form_axiom(rep, "hexagon-1", h, mf_precompose_mul(h, r, 2),
                  convolution_mul(h, r13, r12));
  push_form_axiom(rep, "hexagon-2", h, mf_precompose_mul(h, r, 1),
                  convolution_mul(h, r13, r23));
  push_form_axiom(rep, "qyb", h, conv3(h, r12, r13, r23), conv3(h, r23, r13, r12));
  // R * R^op = eps (x) eps, equivalent to R^op being the convolution inverse
  push_form_axiom(rep, "cotriangular", h, convolution_mul(h, r, mf_flip(r)),
                  mf_counit(h, 2));
  return rep;
}

// ==== infinitesimal R-forms =================================================

AxiomReport check_inf_rform(const InfRForm& inf) {
  const FinBialgebra& h = inf.cq.H;
  const MultiForm &r = inf.cq.R, &ri = inf.cq.R_inv, &x = inf.chi;
  AxiomReport rep;

  {
    AxiomResult res{"inf-comm", true, ""};
    for (int a = 0; a < h.dim() && res.pass; ++a)
      for (int b = 0; b < h.dim() && res.pass; ++b) {
        SVec lhs, rhs;
        braided_mul_sides(h, x, a, b, false, lhs, rhs);
        if (!svec_eq(lhs, rhs)) {
          res.pass = false;
          res.witness = "at " + h.basis[a] + "⊗" + h.basis[b] + ": lhs = " +
                        svec_str(h, lhs) + ", rhs = " + svec_str(h, rhs);
        }
      }
    rep.axioms.push_back(std::move(res));
  }

  MultiForm x13 = mf13(h, x);
  push_form_axiom(rep, "inf-hexagon-1", h, mf_precompose_mul(h, x, 2),
                  mf_add(mf12(h, x), conv3(h, mf12(h, ri), x13, mf12(h, r))));
  push_form_axiom(rep, "inf-hexagon-2", h, mf_precompose_mul(h, x, 1),
                  mf_add(mf23(h, x), conv3(h, mf23(h, ri), x13, mf23(h, r))));
  push_form_axiom(rep, "counit-chi-left", h, unit_slot_form(h, x, 1), mf_zero(h, 1));
  push_form_axiom(rep, "counit-chi-right", h, unit_slot_form(h, x, 2), mf_zero(h, 1));
  return rep;
}

SolutionSpace classify_inf_rforms(const CoQTStructure& cq) {
  const FinBialgebra& h = cq.H;
  const int n = h.dim();
  auto rf = [&](int i, int j) { return mf_value2(cq.R, i, j); };
  auto rfi = [&](int i, int j) { return mf_value2(cq.R_inv, i, j); };

  std::vector<TensorElement> d2(n);  // (Delta (x) Id) Delta per basis element
  for (int i = 0; i < n; ++i) d2[i] = te_delta_power(h, i, 2);

  std::map<std::vector<int>, SRow> rows_a;
  std::vector<SRow> rows;

  // chi(a1, b1) a2 b2 - a1 b1 chi(a2, b2) = 0, one row per output coordinate
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& t1 : h.comul[a])
        for (const auto& t2 : h.comul[b]) {
          Scalar c = t1.c * t2.c;
          for (const auto& [out, mc] : h.mul_at(t1.k, t2.k))
            srow_axpy(rows_a[{a, b, out}], c * mc, SRow{{t1.j * n + t2.j, Scalar(1)}});
          for (const auto& [out, mc] : h.mul_at(t1.j, t2.j))
            srow_axpy(rows_a[{a, b, out}], -(c * mc), SRow{{t1.k * n + t2.k, Scalar(1)}});
        }
  for (auto& [k, row] : rows_a) rows.push_back(std::move(row));

  // chi(a, bc) - chi(a, b) eps(c) - R^{-1}(a1, b1) chi(a2, c) R(a3, b2) = 0
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        SRow row;
        for (const auto& [r, cr] : h.mul_at(b, c)) row[a * n + r] = cr;
        srow_axpy(row, -h.counit[c], SRow{{a * n + b, Scalar(1)}});
        for (const auto& [t, cd] : d2[a].c)
          for (const auto& t2 : h.comul[b]) {
            Scalar v = cd * t2.c * rfi(t[0], t2.j) * rf(t[2], t2.k);
            if (!v.is_zero()) srow_axpy(row, -v, SRow{{t[1] * n + c, Scalar(1)}});
          }
        if (!row.empty()) rows.push_back(std::move(row));
      }

  // chi(ab, c) - eps(a) chi(b, c) - R^{-1}(b1, c1) chi(a, c2) R(b2, c3) = 0
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        SRow row;
        for (const auto& [r, cr] : h.mul_at(a, b)) row[r * n + c] = cr;
        srow_axpy(row, -h.counit[a], SRow{{b * n + c, Scalar(1)}});
        for (const auto& t2 : h.comul[b])
          for (const auto& [t, cd] : d2[c].c) {
            Scalar v = t2.c * cd * rfi(t2.j, t[0]) * rf(t2.k, t[2]);
            if (!v.is_zero()) srow_axpy(row, -v, SRow{{a * n + t[1], Scalar(1)}});
          }
        if (!row.empty()) rows.push_back(std::move(row));
      }

  return nullspace(n * n, rows);
}

InfRForm inf_form_from_coords(const CoQTStructure& cq, const SRow& coords) {
  const int n = cq.H.dim();
  MultiForm x = mf_zero(cq.H, 2);
  for (const auto& [u, c] : coords) {
    if (u < 0 || u >= n * n) fail(Err::Input, "coordinate out of range");
    mf_accum(x, {u / n, u % n}, c);
  }
  return InfRForm{cq, std::move(x)};
}

SRow coords_from_form(const MultiForm& chi) {
  if (chi.order != 2) fail(Err::Input, "chi must have order 2");
  SRow r;
  for (const auto& [key, c] : chi.c) r.emplace(key[0] * chi.n + key[1], c);
  return r;
}

bool check_form_cc4(const InfRForm& inf) {
  const FinBialgebra& h = inf.cq.H;
  return mf_eq(convolution_mul(h, inf.cq.R, inf.chi),
               convolution_mul(h, mf_flip(inf.chi), inf.cq.R));
}

// ==== triangle actions ======================================================

TensorElement triangle_action_right(const CoQTStructure& cq,
                                    const TensorElement& a, const TensorElement& b) {
  if (a.order != 1 || b.order != 1) fail(Err::Input, "triangle action needs order 1");
  const FinBialgebra& h = cq.H;
  TensorElement out = te_zero(h, 1);
  for (const auto& [ka, ca] : a.c) {
    TensorElement d3 = te_delta_power(h, ka[0], 2);
    for (const auto& [kb, cb] : b.c)
      for (const auto& [t, cd] : d3.c)
        for (const auto& t2 : h.comul[kb[0]]) {
          Scalar v = ca * cb * cd * t2.c * mf_value2(cq.R_inv, t[0], t2.j) *
                     mf_value2(cq.R, t[2], t2.k);
          if (!v.is_zero()) te_accum(out, {t[1]}, v);
        }
  }
  return out;
}

TensorElement triangle_action_left(const CoQTStructure& cq,
                                   const TensorElement& b, const TensorElement& a) {
  if (a.order != 1 || b.order != 1) fail(Err::Input, "triangle action needs order 1");
  const FinBialgebra& h = cq.H;
  TensorElement out = te_zero(h, 1);
  for (const auto& [ka, ca] : a.c) {
    TensorElement d3 = te_delta_power(h, ka[0], 2);
    for (const auto& [kb, cb] : b.c)
      for (const auto& t2 : h.comul[kb[0]])
        for (const auto& [t, cd] : d3.c) {
          Scalar v = ca * cb * t2.c * cd * mf_value2(cq.R_inv, t2.j, t[0]) *
                     mf_value2(cq.R, t2.k, t[2]);
          if (!v.is_zero()) te_accum(out, {t[1]}, v);
        }
  }
  return out;
}

// ==== algebra cohomology ====================================================

MultiForm bar_apply(const FinBialgebra& h, const MultiForm& f) {
  const int k = f.order;
  std::vector<int> tail, head;
  for (int i = 1; i <= k; ++i) {
    tail.push_back(i + 1);
    head.push_back(i);
  }
  MultiForm acc = mf_embed(h, f, k + 1, tail);  // eps in front
  for (int i = 1; i <= k; ++i) {
    MultiForm d = mf_precompose_mul(h, f, i);
    acc = (i % 2 == 1) ? mf_sub(acc, d) : mf_add(acc, d);
  }
  MultiForm last = mf_embed(h, f, k + 1, head);  // eps behind
  acc = ((k + 1) % 2 == 1) ? mf_sub(acc, last) : mf_add(acc, last);
  return acc;
}

LinearMap bar_differential(const FinBialgebra& h, int n) {
  if (n < 0 || n > 3) fail(Err::Input, "bar differential supported for n = 0..3");
  const int dim = h.dim();
  long dom = 1;
  for (int i = 0; i < n; ++i) dom *= dim;
  LinearMap f;
  f.rows = (int)(dom * dim);
  f.cols = (int)dom;
  if (n == 0) return f;  // trivial coefficients kill b^0
  for (long col = 0; col < dom; ++col) {
    std::vector<int> key(n);
    long rest = col;
    for (int i = n - 1; i >= 0; --i) {
      key[i] = (int)(rest % dim);
      rest /= dim;
    }
    MultiForm delta = mf_zero(h, n);
    delta.c.emplace(key, Scalar(1));
    MultiForm img = bar_apply(h, delta);
    for (const auto& [kk, c] : img.c) {
      long row = 0;
      for (int i : kk) row = row * dim + i;
      f.add((int)row, (int)col, c);
    }
  }
  return f;
}

CohomologyDims bar_cohomology_dim(const FinBialgebra& h, int n) {
  if (n < 1 || n > 2) fail(Err::Input, "cohomology dimensions supported for n = 1, 2");
  LinearMap bn = bar_differential(h, n);
  LinearMap bp = bar_differential(h, n - 1);
  LinearMap bnext = bar_differential(h, n + 1);
  if (!lm_compose(bnext, bn).a.empty())
    fail(Err::Input, "differential does not square to zero; input is not a bialgebra");
  CohomologyDims out;
  out.cocycles = bn.cols - bn.rank();
  out.coboundaries = bp.rank();
  out.cohomology = out.cocycles - out.coboundaries;
  return out;
}

// ==== Casimir form ==========================================================

MultiForm casimir_form(const InfRForm& inf) {
  const FinBialgebra& h = inf.cq.H;
  MultiForm f1 = mf_precompose_antipode(h, inf.chi, 1);  // (u, v) -> chi(S u, v)
  MultiForm g = mf_zero(h, 1);
  for (int x = 0; x < h.dim(); ++x) {
    Scalar acc(0);
    for (const auto& t : h.comul[x]) acc = acc + t.c * mf_value2(f1, t.j, t.k);
    if (!acc.is_zero()) g.c.emplace(std::vector<int>{x}, acc);
  }
  return g;
}

CasimirReport check_casimir_form(const InfRForm& inf) {
  const FinBialgebra& h = inf.cq.H;
  MultiForm g = casimir_form(inf);
  auto gv = [&](int i) { return mf_value(g, {i}); };
  CasimirReport rep;
  rep.central = true;
  for (int x = 0; x < h.dim() && rep.central; ++x) {
    std::map<int, Scalar> acc;
    for (const auto& t : h.comul[x]) {
      Scalar d = t.c * gv(t.j);  // gamma(x1) x2
      if (!d.is_zero()) acc[t.k] = acc.count(t.k) ? acc[t.k] + d : d;
      Scalar e = t.c * gv(t.k);  // x1 gamma(x2)
      if (!e.is_zero()) acc[t.j] = acc.count(t.j) ? acc[t.j] - e : -e;
    }
    for (const auto& [i, c] : acc)
      if (!c.is_zero()) rep.central = false;
  }
  MultiForm b1 = bar_apply(h, g);
  MultiForm ss = mf_flip(
      mf_precompose_antipode(h, mf_precompose_antipode(h, inf.chi, 1), 2));
  rep.coboundary_sum = mf_eq(b1, mf_add(inf.chi, ss));
  rep.coboundary_two = mf_eq(b1, mf_scale(inf.chi, Scalar(2)));
  return rep;
}

// ==== transfer along the linear dual ========================================

FinBialgebra finite_dual(const FinBialgebra& h) {
  const int n = h.dim();
  FinBialgebra d;
  d.field = h.field;
  d.name = h.name.empty() ? "" : h.name + "*";
  d.basis.reserve(n);
  for (const auto& b : h.basis) d.basis.push_back(b + "*");

  d.mul.assign((size_t)n * n, {});
  for (int k = 0; k < n; ++k)
    for (const auto& t : h.comul[k]) svec_accum(d.mul[(size_t)t.j * n + t.k], k, t.c);

  d.comul.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [r, c] : h.mul_at(i, j)) d.comul[r].push_back({i, j, c});

  d.unit = {};
  for (int i = 0; i < n; ++i) svec_accum(d.unit, i, h.counit[i]);
  d.counit.assign(n, Scalar(0));
  for (const auto& [i, c] : h.unit) d.counit[i] = c;

  if (h.antipode) {
    std::vector<std::vector<Scalar>> s(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s[i][j] = (*h.antipode)[j][i];
    d.antipode = std::move(s);
  }

  check_wellformed(d);
  AxiomReport rep = validate_bialgebra(d);
  if (!rep.all_pass()) fail(Err::Input, "dual is not a bialgebra: " + rep.summary());
  return d;
}

CoQTStructure dualize_qt(const QTStructure& qt) {
  FinBialgebra hd = finite_dual(qt.H);
  MultiForm r{hd.dim(), 2, qt.R.c};
  MultiForm ri{hd.dim(), 2, qt.R_inv.c};
  return CoQTStructure{std::move(hd), std::move(r), std::move(ri)};
}

InfRForm dualize_inf(const InfRMatrix& inf) {
  CoQTStructure cq = dualize_qt(inf.qt);
  MultiForm x{cq.H.dim(), 2, inf.chi.c};
  return InfRForm{std::move(cq), std::move(x)};
}

QTStructure dualize_coqt_to_qt(const CoQTStructure& cq) {
  FinBialgebra hd = finite_dual(cq.H);
  TensorElement r{hd.dim(), 2, cq.R.c};
  TensorElement ri{hd.dim(), 2, cq.R_inv.c};
  return QTStructure{std::move(hd), std::move(r), std::move(ri)};
}

InfRMatrix dualize_form_to_element(const InfRForm& inf) {
  QTStructure qt = dualize_coqt_to_qt(inf.cq);
  TensorElement x{qt.H.dim(), 2, inf.chi.c};
  return InfRMatrix{std::move(qt), std::move(x)};
}

}  // namespace ibraid
