#include "ibraid/constructions.hpp"

#include <sstream>

namespace ibraid {

namespace {

Scalar half() { return Scalar(1) / Scalar(2); }

SVec apply_matrix(const std::vector<std::vector<Scalar>>& f, const SVec& v, int rows) {
  std::map<int, Scalar> acc;
  for (const auto& [j, c] : v)
    for (int i = 0; i < rows; ++i) {
      Scalar t = f[i][j] * c;
      if (t.is_zero()) continue;
      auto it = acc.find(i);
      if (it == acc.end())
        acc.emplace(i, t);
      else
        it->second = it->second + t;
    }
  SVec out;
  for (const auto& [i, c] : acc)
    if (!c.is_zero()) out.emplace_back(i, c);
  return out;
}

}  // namespace

// ==== tensor products =======================================================

TensorProductResult tensor_product_precartier(const InfRMatrix& a,
                                              const InfRMatrix& b, int cap) {
  const FinBialgebra &h = a.qt.H, &hp = b.qt.H;
  if (!(h.field == hp.field)) fail(Err::Input, "factors live over different fields");
  const int n = h.dim(), m = hp.dim(), nm = n * m;
  if (nm > cap) {
    std::ostringstream os;
    os << "tensor product dimension " << nm << " exceeds the cap " << cap;
    fail(Err::ResourceCap, os.str());
  }

  FinBialgebra g;
  g.field = h.field;
  g.name = (h.name.empty() ? "?" : h.name) + "." + (hp.name.empty() ? "?" : hp.name);
  g.basis.reserve(nm);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) g.basis.push_back(h.basis[i] + "." + hp.basis[j]);

  g.mul.assign((size_t)nm * nm, {});
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < m; ++p)
      for (int j = 0; j < n; ++j)
        for (int q = 0; q < m; ++q) {
          SVec& cell = g.mul[(size_t)(i * m + p) * nm + (j * m + q)];
          for (const auto& [r, c1] : h.mul_at(i, j))
            for (const auto& [s, c2] : hp.mul_at(p, q))
              svec_accum(cell, r * m + s, c1 * c2);
        }

  g.comul.assign(nm, {});
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < m; ++p) {
      auto& terms = g.comul[i * m + p];
      for (const auto& t1 : h.comul[i])
        for (const auto& t2 : hp.comul[p])
          terms.push_back({t1.j * m + t2.j, t1.k * m + t2.k, t1.c * t2.c});
    }

  for (const auto& [i, c1] : h.unit)
    for (const auto& [p, c2] : hp.unit) svec_accum(g.unit, i * m + p, c1 * c2);

  g.counit.reserve(nm);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < m; ++p) g.counit.push_back(h.counit[i] * hp.counit[p]);

  if (h.antipode && hp.antipode) {
    std::vector<std::vector<Scalar>> s(nm, std::vector<Scalar>(nm, Scalar(0)));
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < m; ++p)
        for (int j = 0; j < n; ++j)
          for (int q = 0; q < m; ++q)
            s[i * m + p][j * m + q] = (*h.antipode)[i][j] * (*hp.antipode)[p][q];
    g.antipode = std::move(s);
  }

  AxiomReport brep = validate_bialgebra(g);
  if (!brep.all_pass())
    fail(Err::Input, "tensor product failed validation: " + brep.summary());

  TensorElement r = te_zero(g, 2);
  for (const auto& [k1, c1] : a.qt.R.c)
    for (const auto& [k2, c2] : b.qt.R.c)
      te_accum(r, {k1[0] * m + k2[0], k1[1] * m + k2[1]}, c1 * c2);

  TensorElement xl = te_zero(g, 2), xr = te_zero(g, 2);
  for (const auto& [k, c] : a.chi.c)
    for (const auto& [u1, cu1] : hp.unit)
      for (const auto& [u2, cu2] : hp.unit)
        te_accum(xl, {k[0] * m + u1, k[1] * m + u2}, c * cu1 * cu2);
  for (const auto& [k, c] : b.chi.c)
    for (const auto& [u1, cu1] : h.unit)
      for (const auto& [u2, cu2] : h.unit)
        te_accum(xr, {u1 * m + k[0], u2 * m + k[1]}, c * cu1 * cu2);

  QTStructure qt = make_qt(g, r);
  TensorProductResult out{std::move(g), std::move(qt), std::move(xl), std::move(xr)};
  AxiomReport qrep = check_quasitriangular(out.H, out.qt.R);
  if (!qt_axioms_pass(qrep))
    fail(Err::Input, "tensor product structure failed verification: " + qrep.summary());
  for (const TensorElement* x : {&out.chi_left, &out.chi_right}) {
    if (x->is_zero()) continue;
    AxiomReport irep = check_inf_rmatrix(InfRMatrix{out.qt, *x});
    if (!irep.all_pass())
      fail(Err::Input, "tensor product chi failed verification: " + irep.summary());
  }
  return out;
}

// ==== pushforward ===========================================================

InfRMatrix pushforward(const FinBialgebra& dst,
                       const std::vector<std::vector<Scalar>>& f,
                       const InfRMatrix& src) {
  const FinBialgebra& h = src.qt.H;
  const int n = h.dim(), np = dst.dim();
  if ((int)f.size() != np) fail(Err::Input, "map has wrong number of rows");
  for (const auto& row : f)
    if ((int)row.size() != n) fail(Err::Input, "map has wrong number of columns");

  auto img = [&](int j) {
    SVec v;
    for (int i = 0; i < np; ++i)
      if (!f[i][j].is_zero()) v.emplace_back(i, f[i][j]);
    return v;
  };

  // algebra map: f(e_i e_j) = f(e_i) f(e_j), f(1) = 1
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SVec lhs = apply_matrix(f, h.mul_at(i, j), np);
      SVec rhs = mul_vec(dst, img(i), img(j));
      if (!svec_eq(lhs, rhs))
        fail(Err::NotBialgebraMap, "multiplication is not respected at " +
                                       h.basis[i] + ", " + h.basis[j]);
    }
  if (!svec_eq(apply_matrix(f, h.unit, np), dst.unit))
    fail(Err::NotBialgebraMap, "unit is not respected");

  // coalgebra map: Delta(f(a)) = (f x f)(Delta(a)), eps(f(a)) = eps(a)
  for (int i = 0; i < n; ++i) {
    std::map<std::vector<int>, Scalar> lhs;
    for (const auto& [j, c] : img(i))
      for (const auto& t : dst.comul[j]) {
        std::vector<int> key{t.j, t.k};
        auto it = lhs.find(key);
        Scalar v = c * t.c;
        if (it == lhs.end())
          lhs.emplace(std::move(key), v);
        else
          it->second = it->second + v;
      }
    std::map<std::vector<int>, Scalar> rhs;
    for (const auto& t : h.comul[i])
      for (const auto& [p, c1] : img(t.j))
        for (const auto& [q, c2] : img(t.k)) {
          std::vector<int> key{p, q};
          auto it = rhs.find(key);
          Scalar v = t.c * c1 * c2;
          if (it == rhs.end())
            rhs.emplace(std::move(key), v);
          else
            it->second = it->second + v;
        }
    TensorElement tl{np, 2, {}}, tr{np, 2, {}};
    for (auto& [k, c] : lhs)
      if (!c.is_zero()) tl.c.emplace(k, c);
    for (auto& [k, c] : rhs)
      if (!c.is_zero()) tr.c.emplace(k, c);
    if (!te_eq(tl, tr))
      fail(Err::NotBialgebraMap, "comultiplication is not respected at " + h.basis[i]);
    if (!(counit_vec(dst, img(i)) == h.counit[i]))
      fail(Err::NotBialgebraMap, "counit is not respected at " + h.basis[i]);
  }

  LinearMap lm;
  lm.rows = np;
  lm.cols = n;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < n; ++j)
      if (!f[i][j].is_zero()) lm.add(i, j, f[i][j]);
  if (lm.rank() != np) fail(Err::NotSurjective, "map does not reach the whole target");

  TensorElement r = te_map_legs(src.qt.R, f, np);
  TensorElement x = te_map_legs(src.chi, f, np);
  InfRMatrix out{make_qt(dst, r), std::move(x)};
  AxiomReport qrep = check_quasitriangular(dst, out.qt.R);
  if (!qt_axioms_pass(qrep))
    fail(Err::Input, "pushforward structure failed verification: " + qrep.summary());
  AxiomReport irep = check_inf_rmatrix(out);
  if (!irep.all_pass())
    fail(Err::Input, "pushforward chi failed verification: " + irep.summary());
  return out;
}

// ==== Lie-level checks ======================================================

void check_lie(const LieAlgebraData& g) {
  const int n = g.dim();
  if ((int)g.bracket.size() != n * n) fail(Err::Input, "bracket table has wrong size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SVec s = svec_add(g.bracket_at(i, j), g.bracket_at(j, i));
      if (!s.empty())
        fail(Err::Input, "bracket is not antisymmetric at " + g.basis[i] + ", " +
                             g.basis[j]);
    }
  auto brk = [&](const SVec& a, int k) {
    SVec acc;
    for (const auto& [i, c] : a)
      acc = svec_add(acc, svec_scale(g.bracket_at(i, k), c));
    return acc;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
        SVec s = brk(g.bracket_at(i, j), k);
        SVec t = brk(g.bracket_at(j, k), i);
        SVec u = brk(g.bracket_at(k, i), j);
        if (!svec_add(svec_add(s, t), u).empty())
          fail(Err::Input, "Jacobi identity fails at " + g.basis[i] + ", " +
                               g.basis[j] + ", " + g.basis[k]);
      }
}

LieCheckReport lie_check(const LieAlgebraData& g, const TensorElement& r) {
  check_lie(g);
  if (r.order != 2) fail(Err::Input, "r must have order 2");
  const int n = g.dim();
  if (r.n != n) fail(Err::Input, "r dimension mismatch");

  LieCheckReport rep;
  TensorElement acc{n, 3, {}};
  for (const auto& [k1, c1] : r.c)
    for (const auto& [k2, c2] : r.c) {
      Scalar c = c1 * c2;
      for (const auto& [b, cb] : g.bracket_at(k1[0], k2[0]))
        te_accum(acc, {b, k1[1], k2[1]}, c * cb);  // [r12, r13]
      for (const auto& [b, cb] : g.bracket_at(k1[1], k2[0]))
        te_accum(acc, {k1[0], b, k2[1]}, c * cb);  // [r12, r23]
      for (const auto& [b, cb] : g.bracket_at(k1[1], k2[1]))
        te_accum(acc, {k1[0], k2[0], b}, c * cb);  // [r13, r23]
    }
  rep.cybe = acc.is_zero();

  TensorElement sym = te_add(r, flip_op(r));
  rep.symmetrization_invariant = true;
  for (int x = 0; x < n && rep.symmetrization_invariant; ++x) {
    TensorElement inv{n, 2, {}};
    for (const auto& [k, c] : sym.c) {
      for (const auto& [b, cb] : g.bracket_at(x, k[0])) te_accum(inv, {b, k[1]}, c * cb);
      for (const auto& [b, cb] : g.bracket_at(x, k[1])) te_accum(inv, {k[0], b}, c * cb);
    }
    rep.symmetrization_invariant = inv.is_zero();
  }

  rep.skew = te_eq(flip_op(r), te_neg(r));
  return rep;
}

// ==== built-in examples =====================================================

FinBialgebra sweedler_bialgebra() {
  FinBialgebra h;
  h.field = field_rationals();
  h.name = "sweedler";
  h.basis = {"1", "g", "x", "xg"};
  h.mul.assign(16, {});
  auto set = [&](int i, int j, std::initializer_list<std::pair<int, long>> terms) {
    SVec v;
    for (const auto& [k, c] : terms) v.emplace_back(k, Scalar(c));
    h.mul[(size_t)i * 4 + j] = std::move(v);
  };
  for (int j = 0; j < 4; ++j) set(0, j, {{j, 1}});
  set(1, 0, {{1, 1}});
  set(2, 0, {{2, 1}});
  set(3, 0, {{3, 1}});
  set(1, 1, {{0, 1}});
  set(1, 2, {{3, -1}});
  set(1, 3, {{2, -1}});
  set(2, 1, {{3, 1}});
  set(2, 2, {});
  set(2, 3, {});
  set(3, 1, {{2, 1}});
  set(3, 2, {});
  set(3, 3, {});
  h.comul = {
      {{0, 0, Scalar(1)}},
      {{1, 1, Scalar(1)}},
      {{2, 0, Scalar(1)}, {1, 2, Scalar(1)}},
      {{3, 1, Scalar(1)}, {0, 3, Scalar(1)}},
  };
  h.unit = {{0, Scalar(1)}};
  h.counit = {Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
  std::vector<std::vector<Scalar>> s(4, std::vector<Scalar>(4, Scalar(0)));
  s[0][0] = Scalar(1);
  s[1][1] = Scalar(1);
  s[3][2] = Scalar(1);   // S(x) = xg
  s[2][3] = Scalar(-1);  // S(xg) = -x
  h.antipode = std::move(s);
  return h;
}

TensorElement sweedler_R(const Scalar& lambda) {
  FinBialgebra h = sweedler_bialgebra();
  TensorElement r = te_zero(h, 2);
  te_accum(r, {0, 0}, half());
  te_accum(r, {1, 0}, half());
  te_accum(r, {0, 1}, half());
  te_accum(r, {1, 1}, -half());
  Scalar l2 = lambda * half();
  te_accum(r, {2, 2}, l2);
  te_accum(r, {3, 2}, -l2);
  te_accum(r, {2, 3}, l2);
  te_accum(r, {3, 3}, l2);
  return r;
}

TensorElement sweedler_chi(const Scalar& alpha) {
  FinBialgebra h = sweedler_bialgebra();
  TensorElement x = te_zero(h, 2);
  te_accum(x, {3, 2}, alpha);
  return x;
}

TensorElement sweedler_twist(const Scalar& t) {
  FinBialgebra h = sweedler_bialgebra();
  TensorElement f = te_unit(h, 2);
  te_accum(f, {3, 2}, t * half());
  return f;
}

FinBialgebra group_algebra_z2() {
  FinBialgebra h;
  h.field = field_rationals();
  h.name = "kZ2";
  h.basis = {"1", "g"};
  h.mul = {{{0, Scalar(1)}}, {{1, Scalar(1)}}, {{1, Scalar(1)}}, {{0, Scalar(1)}}};
  h.comul = {{{0, 0, Scalar(1)}}, {{1, 1, Scalar(1)}}};
  h.unit = {{0, Scalar(1)}};
  h.counit = {Scalar(1), Scalar(1)};
  std::vector<std::vector<Scalar>> s(2, std::vector<Scalar>(2, Scalar(0)));
  s[0][0] = Scalar(1);
  s[1][1] = Scalar(1);
  h.antipode = std::move(s);
  return h;
}

TensorElement group_algebra_z2_R() {
  FinBialgebra h = group_algebra_z2();
  TensorElement r = te_zero(h, 2);
  te_accum(r, {0, 0}, half());
  te_accum(r, {0, 1}, half());
  te_accum(r, {1, 0}, half());
  te_accum(r, {1, 1}, -half());
  return r;
}

FinBialgebra trivial_bialgebra() {
  FinBialgebra h;
  h.field = field_rationals();
  h.name = "trivial";
  h.basis = {"1"};
  h.mul = {{{0, Scalar(1)}}};
  h.comul = {{{0, 0, Scalar(1)}}};
  h.unit = {{0, Scalar(1)}};
  h.counit = {Scalar(1)};
  h.antipode = std::vector<std::vector<Scalar>>{{Scalar(1)}};
  return h;
}

LieAlgebraData sl2_lie() {
  LieAlgebraData g;
  g.field = field_rationals();
  g.basis = {"e", "h", "f"};
  g.bracket.assign(9, {});
  auto set = [&](int i, int j, int k, long c) {
    g.bracket[(size_t)i * 3 + j] = {{k, Scalar(c)}};
    g.bracket[(size_t)j * 3 + i] = {{k, Scalar(-c)}};
  };
  set(1, 0, 0, 2);   // [h, e] = 2e
  set(1, 2, 2, -2);  // [h, f] = -2f
  set(0, 2, 1, 1);   // [e, f] = h
  return g;
}

TensorElement sl2_r() {
  TensorElement r{3, 2, {}};
  te_accum(r, {0, 2}, Scalar(1));
  te_accum(r, {1, 1}, Scalar(1) / Scalar(4));
  return r;
}

BuiltinObject builtin(const std::string& name, const Scalar& param) {
  BuiltinObject out;
  if (name == "sweedler") {
    out.kind = "bialgebra";
    out.H = sweedler_bialgebra();
  } else if (name == "sweedler_R") {
    out.kind = "element";
    out.H = sweedler_bialgebra();
    out.elem = sweedler_R(param);
  } else if (name == "sweedler_chi") {
    out.kind = "element";
    out.H = sweedler_bialgebra();
    out.elem = sweedler_chi(param);
  } else if (name == "sweedler_twist") {
    out.kind = "element";
    out.H = sweedler_bialgebra();
    out.elem = sweedler_twist(param);
  } else if (name == "group_algebra_Z2") {
    out.kind = "bialgebra";
    out.H = group_algebra_z2();
  } else if (name == "group_algebra_Z2_R") {
    out.kind = "element";
    out.H = group_algebra_z2();
    out.elem = group_algebra_z2_R();
  } else if (name == "trivial") {
    out.kind = "bialgebra";
    out.H = trivial_bialgebra();
  } else if (name == "sl2_r") {
    out.kind = "lie";
    out.lie = sl2_lie();
    out.elem = sl2_r();
  } else {
    fail(Err::UnknownBuiltin, "unknown builtin '" + name + "'");
  }
  return out;
}

}  // namespace ibraid
