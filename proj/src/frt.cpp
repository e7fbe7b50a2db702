#include "ibraid/frt.hpp"

#include <algorithm>
#include <tuple>

namespace ibraid {

namespace {

// ==== dense inverse on V (x) V ==============================================

// m[(k*n+l)][(i*n+j)] = coefficient of v_kl in the image of v_ij; augmented
// Gauss-Jordan with unit pivots so truncated-polynomial scalars work too
std::vector<Scalar> tensor_inverse(int n, const Scalar& zero, const Scalar& one,
                                   const std::vector<Scalar>& c) {
  const int m = n * n;
  std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(2 * m, zero));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          a[k * n + l][i * n + j] = c[(size_t)((i * n + j) * n + k) * n + l];
  for (int d = 0; d < m; ++d) a[d][m + d] = one;
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (a[r][col].is_unit()) {
        piv = r;
        break;
      }
    if (piv < 0) fail(Err::NotInvertible, "braiding tensor is not invertible");
    std::swap(a[col], a[piv]);
    const Scalar inv = a[col][col].inverse();
    for (int x = 0; x < 2 * m; ++x) a[col][x] = a[col][x] * inv;
    for (int r = 0; r < m; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Scalar f = a[r][col];
      for (int x = col; x < 2 * m; ++x) a[r][x] = a[r][x] - f * a[col][x];
    }
  }
  std::vector<Scalar> out((size_t)m * m, zero);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out[(size_t)((i * n + j) * n + k) * n + l] = a[k * n + l][m + i * n + j];
  return out;
}

// ==== endomorphisms of V^{(x)3} by columns ==================================

using Cols = std::vector<SRow>;  // col[j] = image of basis triple j

int t3(int n, int a, int b, int c) { return (a * n + b) * n + c; }

Cols emb12(int n, const std::vector<Scalar>& t) {
  Cols out((size_t)n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        SRow& col = out[t3(n, a, b, c)];
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const Scalar& v = t[(size_t)((a * n + b) * n + k) * n + l];
            if (!v.is_zero()) col[t3(n, k, l, c)] = v;
          }
      }
  return out;
}

Cols emb23(int n, const std::vector<Scalar>& t) {
  Cols out((size_t)n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        SRow& col = out[t3(n, a, b, c)];
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const Scalar& v = t[(size_t)((b * n + c) * n + k) * n + l];
            if (!v.is_zero()) col[t3(n, a, k, l)] = v;
          }
      }
  return out;
}

Cols emb13(int n, const std::vector<Scalar>& t) {
  Cols out((size_t)n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        SRow& col = out[t3(n, a, b, c)];
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const Scalar& v = t[(size_t)((a * n + c) * n + k) * n + l];
            if (!v.is_zero()) col[t3(n, k, b, l)] = v;
          }
      }
  return out;
}

Cols compose(const Cols& f, const Cols& g) {  // f after g
  Cols out(g.size());
  for (size_t j = 0; j < g.size(); ++j)
    for (const auto& [i, v] : g[j]) srow_axpy(out[j], v, f[(size_t)i]);
  return out;
}

Cols cols_sub(const Cols& f, const Cols& g) {
  Cols out = f;
  for (size_t j = 0; j < g.size(); ++j) srow_axpy(out[j], Scalar(-1), g[j]);
  return out;
}

std::string trip_label(int n, int idx) {
  int c = idx % n, b = (idx / n) % n, a = idx / (n * n);
  return "v" + std::to_string(a + 1) + ".v" + std::to_string(b + 1) + ".v" +
         std::to_string(c + 1);
}

// first coordinate where the two maps differ, rendered for a witness
std::string cols_diff(int n, const Field& field, const Cols& lhs, const Cols& rhs) {
  for (size_t j = 0; j < lhs.size(); ++j) {
    SRow d = lhs[j];
    srow_axpy(d, Scalar(-1), rhs[j]);
    if (d.empty()) continue;
    const int out = d.begin()->first;
    auto pick = [&](const Cols& m) {
      auto it = m[j].find(out);
      return it == m[j].end() ? Scalar::zero(field) : it->second;
    };
    return "at " + trip_label(n, (int)j) + " -> " + trip_label(n, out) +
           ": lhs = " + scalar_str(pick(lhs), field) +
           ", rhs = " + scalar_str(pick(rhs), field);
  }
  return "";
}

bool cols_eq(const Cols& a, const Cols& b) {
  for (size_t j = 0; j < a.size(); ++j)
    if (!srow_eq(a[j], b[j])) return false;
  return true;
}

// flip composed with the tensor: (tau . t)_{ij}^{kl} = t_{ij}^{lk}
std::vector<Scalar> flip_after(int n, const std::vector<Scalar>& t) {
  std::vector<Scalar> out = t;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out[(size_t)((i * n + j) * n + k) * n + l] =
              t[(size_t)((i * n + j) * n + l) * n + k];
  return out;
}

bool braid_holds(int n, const std::vector<Scalar>& t) {
  Cols m12 = emb12(n, t), m23 = emb23(n, t);
  return cols_eq(compose(m12, compose(m23, m12)), compose(m23, compose(m12, m23)));
}

bool qyb_holds(int n, const std::vector<Scalar>& t) {
  Cols m12 = emb12(n, t), m13 = emb13(n, t), m23 = emb23(n, t);
  return cols_eq(compose(m12, compose(m13, m23)), compose(m23, compose(m13, m12)));
}

void check_word_indices(const BraidedVS& b, const FRTWord& w) {
  for (const auto& [i, j] : w)
    if (i < 0 || i >= b.N || j < 0 || j >= b.N)
      fail(Err::Input, "word letter out of range");
}

void combo_accum(WordCombo& c, const FRTWord& w, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = c.find(w);
  if (it == c.end()) {
    c.emplace(w, v);
    return;
  }
  it->second = it->second + v;
  if (it->second.is_zero()) c.erase(it);
}

// iterate over middle-index tuples [0,n)^m
template <class F>
void for_mid(int n, int m, F&& f) {
  std::vector<int> mid(m, 0);
  while (true) {
    f(mid);
    int p = m - 1;
    while (p >= 0) {
      if (++mid[p] < n) break;
      mid[p] = 0;
      --p;
    }
    if (p < 0) return;
  }
}

void srow_add_at(SRow& r, int i, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = r.find(i);
  if (it == r.end()) {
    r.emplace(i, v);
    return;
  }
  it->second = it->second + v;
  if (it->second.is_zero()) r.erase(it);
}

}  // namespace

// ==== braided vector spaces =================================================

BraidedVS make_braided_vs(int n, const Field& field, std::vector<Scalar> c,
                          std::optional<std::vector<Scalar>> t) {
  if (n <= 0) fail(Err::Input, "dimension must be positive");
  const size_t need = (size_t)n * n * n * n;
  if (c.size() != need) fail(Err::Input, "braiding tensor has wrong size");
  if (t && t->size() != need) fail(Err::Input, "infinitesimal tensor has wrong size");
  BraidedVS out;
  out.N = n;
  out.field = field;
  out.c = std::move(c);
  out.c_inv = tensor_inverse(n, Scalar::zero(field), Scalar::one(field), out.c);
  out.t = std::move(t);
  return out;
}

bool check_braid(const BraidedVS& b) {
  const bool res = braid_holds(b.N, b.c);
  if (res != qyb_holds(b.N, flip_after(b.N, b.c)))
    fail(Err::Input, "braid / Yang-Baxter cross-check out of sync");
  return res;
}

bool check_qyb_matrix(const BraidedVS& b) {
  const bool res = qyb_holds(b.N, b.c);
  if (res != braid_holds(b.N, flip_after(b.N, b.c)))
    fail(Err::Input, "braid / Yang-Baxter cross-check out of sync");
  return res;
}

AxiomReport check_ibv(const BraidedVS& b) {
  if (!b.has_t()) fail(Err::Input, "no infinitesimal tensor present");
  if (!check_braid(b)) fail(Err::Input, "braiding does not satisfy the braid equation");
  const int n = b.N;
  Cols c12 = emb12(n, b.c), c23 = emb23(n, b.c);
  Cols ci12 = emb12(n, b.c_inv), ci23 = emb23(n, b.c_inv);
  Cols t12 = emb12(n, *b.t), t23 = emb23(n, *b.t);

  AxiomReport rep;
  auto push = [&](const std::string& name, const Cols& lhs, const Cols& rhs) {
    std::string w = cols_diff(n, b.field, lhs, rhs);
    rep.axioms.push_back({name, w.empty(), w});
  };
  auto push_chain = [&](const std::string& name, const std::vector<const Cols*>& e) {
    for (size_t p = 0; p + 1 < e.size(); ++p) {
      std::string w = cols_diff(n, b.field, *e[p], *e[p + 1]);
      if (!w.empty()) {
        rep.axioms.push_back({name, false,
                              "forms " + std::to_string(p + 1) + "," +
                                  std::to_string(p + 2) + " differ " + w});
        return;
      }
    }
    rep.axioms.push_back({name, true, ""});
  };

  push("slide-1", compose(c12, compose(c23, t12)), compose(t23, compose(c12, c23)));
  push("slide-2", compose(t12, compose(c23, c12)), compose(c23, compose(c12, t23)));

  Cols e1 = compose(c23, compose(t12, ci23));
  Cols e2 = compose(ci12, compose(t23, c12));
  Cols e3 = compose(ci23, compose(t12, c23));
  Cols e4 = compose(c12, compose(t23, ci12));
  push("conjugation", e1, e4);
  push_chain("four-conjugates", {&e1, &e2, &e3, &e4});

  Cols comm1 = cols_sub(compose(t23, e4), compose(e4, t23));
  Cols comm2 = cols_sub(compose(t12, t23), compose(t23, t12));
  Cols comm3 = cols_sub(compose(e1, t12), compose(t12, e1));
  push_chain("pure-braid", {&comm1, &comm2, &comm3});
  return rep;
}

BraidedVS diagonal_braiding(const Field& field,
                            const std::vector<std::vector<Scalar>>& q,
                            std::optional<std::vector<Scalar>> t) {
  const int n = (int)q.size();
  if (n == 0) fail(Err::Input, "empty diagonal braiding matrix");
  for (const auto& row : q)
    if ((int)row.size() != n) fail(Err::Input, "diagonal braiding matrix is not square");
  std::vector<Scalar> c((size_t)n * n * n * n, Scalar::zero(field));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c[(size_t)((i * n + j) * n + j) * n + i] = q[i][j];
  return make_braided_vs(n, field, std::move(c), std::move(t));
}

bool check_diagonal_ibv(const Field& field,
                        const std::vector<std::vector<Scalar>>& q,
                        const std::vector<Scalar>& t) {
  const int n = (int)q.size();
  if (n == 0) fail(Err::Input, "empty diagonal braiding matrix");
  for (const auto& row : q)
    if ((int)row.size() != n) fail(Err::Input, "diagonal braiding matrix is not square");
  for (const auto& row : q)
    for (const auto& v : row)
      if (v.is_zero()) fail(Err::Input, "zero entry in the diagonal braiding matrix");
  if (t.size() != (size_t)n * n * n * n)
    fail(Err::Input, "infinitesimal tensor has wrong size");
  auto tt = [&](int i, int j, int k, int l) -> const Scalar& {
    return t[(size_t)((i * n + j) * n + k) * n + l];
  };
  const Scalar zero = Scalar::zero(field);

  // the four conjugates of the infinitesimal tensor, coefficient by coefficient
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const Scalar& v = tt(i, k, a, b);
            if (v.is_zero()) continue;
            Scalar e1 = q[k][j].inverse() * q[b][j] * v;
            Scalar e2 = q[i][j] * q[a][j].inverse() * v;
            Scalar e3 = q[j][k] * q[j][b].inverse() * v;
            Scalar e4 = q[j][i].inverse() * q[j][a] * v;
            if (!(e1 == e2 && e2 == e3 && e3 == e4)) return false;
          }

  // the commutator chain, summed over the contracted index
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
              Scalar s1 = zero, s2 = zero, s3 = zero;
              for (int b = 0; b < n; ++b) {
                s1 = s1 + q[j][i].inverse() * q[j][a] * tt(i, k, a, b) * tt(j, b, u, v) -
                     q[u][i].inverse() * q[u][a] * tt(i, b, a, v) * tt(j, k, u, b);
                s2 = s2 + tt(j, k, b, v) * tt(i, b, a, u) - tt(i, j, a, b) * tt(b, k, u, v);
                s3 = s3 + q[v][u] * q[k][u].inverse() * tt(b, k, a, v) * tt(i, j, b, u) -
                     q[v][j] * q[k][j].inverse() * tt(i, k, b, v) * tt(b, j, a, u);
              }
              if (!(s1 == s2 && s2 == s3)) return false;
            }
  return true;
}

// ==== words and the graded quotient =========================================

std::string frt_word_str(const FRTWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t p = 0; p < w.size(); ++p) {
    if (p) s += ".";
    s += "T" + std::to_string(w[p].first + 1) + std::to_string(w[p].second + 1);
  }
  return s;
}

int frt_flat_index(const FRTWord& w, int n) {
  long long idx = 0;
  for (const auto& [i, j] : w) idx = idx * (n * n) + (i * n + j);
  return (int)idx;
}

FRTWord frt_word_from_index(long long idx, int d, int n) {
  FRTWord w((size_t)d);
  for (int p = d - 1; p >= 0; --p) {
    int g = (int)(idx % (n * n));
    idx /= n * n;
    w[(size_t)p] = {g / n, g % n};
  }
  return w;
}

WordCombo frt_relation_c(const BraidedVS& b, int i, int j, int k, int l) {
  WordCombo out;
  for (int m = 0; m < b.N; ++m)
    for (int p = 0; p < b.N; ++p) {
      combo_accum(out, {{m, k}, {p, l}}, b.cc(i, j, m, p));
      combo_accum(out, {{i, m}, {j, p}}, -b.cc(m, p, k, l));
    }
  return out;
}

WordCombo frt_relation_t(const BraidedVS& b, int i, int j, int k, int l) {
  if (!b.has_t()) fail(Err::Input, "no infinitesimal tensor present");
  WordCombo out;
  for (int m = 0; m < b.N; ++m)
    for (int p = 0; p < b.N; ++p) {
      combo_accum(out, {{m, k}, {p, l}}, b.tt(i, j, m, p));
      combo_accum(out, {{i, m}, {j, p}}, -b.tt(m, p, k, l));
    }
  return out;
}

GradedFRT frt_component(const BraidedVS& b, int d, long long cap) {
  if (d < 0) fail(Err::Input, "negative degree");
  const long long m = (long long)b.N * b.N;
  long long ambient = 1;
  for (int p = 0; p < d; ++p) {
    ambient *= m;
    if (ambient > cap)
      fail(Err::ResourceCap, "graded component exceeds the dimension cap");
  }
  GradedFRT out;
  out.degree = d;
  out.ambient = (int)ambient;
  out.ideal = Echelon((int)ambient);
  if (d >= 2) {
    std::vector<WordCombo> rels;
    for (int i = 0; i < b.N; ++i)
      for (int j = 0; j < b.N; ++j)
        for (int k = 0; k < b.N; ++k)
          for (int l = 0; l < b.N; ++l) {
            rels.push_back(frt_relation_c(b, i, j, k, l));
            if (b.has_t()) rels.push_back(frt_relation_t(b, i, j, k, l));
          }
    for (int a = 0; a + 2 <= d; ++a) {
      const int bdeg = d - 2 - a;
      long long ua = 1, vb = 1;
      for (int p = 0; p < a; ++p) ua *= m;
      for (int p = 0; p < bdeg; ++p) vb *= m;
      for (long long ui = 0; ui < ua; ++ui)
        for (long long vi = 0; vi < vb; ++vi)
          for (const auto& rel : rels) {
            SRow row;
            for (const auto& [w, coef] : rel)
              row[(int)((ui * (m * m) + frt_flat_index(w, b.N)) * vb + vi)] = coef;
            out.ideal.insert(std::move(row));
          }
    }
  }
  out.dim = out.ambient - out.ideal.rank();
  out.quotient_basis = out.ideal.free_cols();
  return out;
}

// ==== recursive evaluation ==================================================

FRTEvaluator::FRTEvaluator(const BraidedVS& b)
    : b_(&b), zero_(Scalar::zero(b.field)), one_(Scalar::one(b.field)) {}

Scalar FRTEvaluator::counit(const FRTWord& w) const {
  for (const auto& [i, j] : w)
    if (i != j) return zero_;
  return one_;
}

Scalar FRTEvaluator::r(const FRTWord& a, const FRTWord& b) {
  if (a.empty()) return counit(b);
  if (b.empty()) return counit(a);
  auto key = std::make_pair(a, b);
  if (auto it = r_memo_.find(key); it != r_memo_.end()) return it->second;
  Scalar out = zero_;
  const int n = b_->N;
  if (b.size() > 1) {
    // R(a (x) b' g) = sum R(a^(1) (x) g) R(a^(2) (x) b')
    const FRTWord bp(b.begin(), b.end() - 1);
    const FRTWord g{b.back()};
    const int m = (int)a.size();
    for_mid(n, m, [&](const std::vector<int>& mid) {
      FRTWord a1(a), a2(a);
      for (int p = 0; p < m; ++p) {
        a1[(size_t)p].second = mid[(size_t)p];
        a2[(size_t)p].first = mid[(size_t)p];
      }
      out = out + r(a1, g) * r(a2, bp);
    });
  } else if (a.size() > 1) {
    // R(g a' (x) c) = sum R(g (x) c^(1)) R(a' (x) c^(2))
    const FRTWord gw{a.front()};
    const FRTWord ap(a.begin() + 1, a.end());
    const auto [k, l] = b[0];
    for (int mid = 0; mid < n; ++mid)
      out = out + r(gw, FRTWord{{k, mid}}) * r(ap, FRTWord{{mid, l}});
  } else {
    out = b_->cc(b[0].first, a[0].first, a[0].second, b[0].second);
  }
  r_memo_.emplace(std::move(key), out);
  return out;
}

Scalar FRTEvaluator::r_inv(const FRTWord& a, const FRTWord& b) {
  if (a.empty()) return counit(b);
  if (b.empty()) return counit(a);
  auto key = std::make_pair(a, b);
  if (auto it = rinv_memo_.find(key); it != rinv_memo_.end()) return it->second;
  Scalar out = zero_;
  const int n = b_->N;
  if (b.size() > 1) {
    // Rinv(a (x) g b') = sum Rinv(a^(1) (x) g) Rinv(a^(2) (x) b')
    const FRTWord g{b.front()};
    const FRTWord bp(b.begin() + 1, b.end());
    const int m = (int)a.size();
    for_mid(n, m, [&](const std::vector<int>& mid) {
      FRTWord a1(a), a2(a);
      for (int p = 0; p < m; ++p) {
        a1[(size_t)p].second = mid[(size_t)p];
        a2[(size_t)p].first = mid[(size_t)p];
      }
      out = out + r_inv(a1, g) * r_inv(a2, bp);
    });
  } else if (a.size() > 1) {
    // Rinv(a' g (x) c) = sum Rinv(g (x) c^(1)) Rinv(a' (x) c^(2))
    const FRTWord gw{a.back()};
    const FRTWord ap(a.begin(), a.end() - 1);
    const auto [k, l] = b[0];
    for (int mid = 0; mid < n; ++mid)
      out = out + r_inv(gw, FRTWord{{k, mid}}) * r_inv(ap, FRTWord{{mid, l}});
  } else {
    out = b_->ci(a[0].first, b[0].first, b[0].second, a[0].second);
  }
  rinv_memo_.emplace(std::move(key), out);
  return out;
}

WordCombo FRTEvaluator::act_right(const FRTWord& a, const FRTWord& b) {
  auto key = std::make_pair(a, b);
  if (auto it = actr_memo_.find(key); it != actr_memo_.end()) return it->second;
  const int n = b_->N;
  const int m = (int)a.size(), nb = (int)b.size();
  WordCombo out;
  for_mid(n, m, [&](const std::vector<int>& p) {
    FRTWord a1(a);
    for (int x = 0; x < m; ++x) a1[(size_t)x].second = p[(size_t)x];
    for_mid(n, nb, [&](const std::vector<int>& rr) {
      FRTWord b1(b), b2(b);
      for (int x = 0; x < nb; ++x) {
        b1[(size_t)x].second = rr[(size_t)x];
        b2[(size_t)x].first = rr[(size_t)x];
      }
      const Scalar left = r_inv(a1, b1);
      if (left.is_zero()) return;
      for_mid(n, m, [&](const std::vector<int>& q) {
        FRTWord a2(m), a3(a);
        for (int x = 0; x < m; ++x) {
          a2[(size_t)x] = {p[(size_t)x], q[(size_t)x]};
          a3[(size_t)x].first = q[(size_t)x];
        }
        combo_accum(out, a2, left * r(a3, b2));
      });
    });
  });
  actr_memo_.emplace(std::move(key), out);
  return out;
}

WordCombo FRTEvaluator::act_left(const FRTWord& b, const FRTWord& a) {
  auto key = std::make_pair(b, a);
  if (auto it = actl_memo_.find(key); it != actl_memo_.end()) return it->second;
  const int n = b_->N;
  const int m = (int)a.size(), nb = (int)b.size();
  WordCombo out;
  for_mid(n, nb, [&](const std::vector<int>& rr) {
    FRTWord b1(b), b2(b);
    for (int x = 0; x < nb; ++x) {
      b1[(size_t)x].second = rr[(size_t)x];
      b2[(size_t)x].first = rr[(size_t)x];
    }
    for_mid(n, m, [&](const std::vector<int>& p) {
      FRTWord a1(a);
      for (int x = 0; x < m; ++x) a1[(size_t)x].second = p[(size_t)x];
      const Scalar left = r_inv(b1, a1);
      if (left.is_zero()) return;
      for_mid(n, m, [&](const std::vector<int>& q) {
        FRTWord a2(m), a3(a);
        for (int x = 0; x < m; ++x) {
          a2[(size_t)x] = {p[(size_t)x], q[(size_t)x]};
          a3[(size_t)x].first = q[(size_t)x];
        }
        combo_accum(out, a2, left * r(b2, a3));
      });
    });
  });
  actl_memo_.emplace(std::move(key), out);
  return out;
}

Scalar FRTEvaluator::chi_1n(const std::pair<int, int>& g, const FRTWord& b) {
  Scalar out = zero_;
  auto base = [&](const std::pair<int, int>& g1, const std::pair<int, int>& g2) {
    return b_->tt(g1.first, g2.first, g1.second, g2.second);
  };
  for (size_t cut = 0; cut < b.size(); ++cut) {
    const FRTWord rest(b.begin() + (long)cut + 1, b.end());
    if (counit(rest).is_zero()) continue;
    if (cut == 0) {
      out = out + base(g, b[0]);
      continue;
    }
    const FRTWord prefix(b.begin(), b.begin() + (long)cut);
    for (const auto& [w, v] : act_right(FRTWord{g}, prefix))
      out = out + v * base(w[0], b[cut]);
  }
  return out;
}

Scalar FRTEvaluator::chi(const FRTWord& a, const FRTWord& b) {
  if (!b_->has_t()) fail(Err::Input, "no infinitesimal tensor present");
  if (a.empty() || b.empty()) return zero_;
  auto key = std::make_pair(a, b);
  if (auto it = chi_memo_.find(key); it != chi_memo_.end()) return it->second;
  Scalar out = zero_;
  for (size_t p = 0; p < a.size(); ++p) {
    const FRTWord prefix(a.begin(), a.begin() + (long)p);
    if (counit(prefix).is_zero()) continue;
    const FRTWord suffix(a.begin() + (long)p + 1, a.end());
    if (suffix.empty()) {
      out = out + chi_1n(a[p], b);
    } else {
      for (const auto& [w, v] : act_left(suffix, b)) out = out + v * chi_1n(a[p], w);
    }
  }
  chi_memo_.emplace(std::move(key), out);
  return out;
}

Scalar eval_R(const BraidedVS& b, const FRTWord& w1, const FRTWord& w2) {
  check_word_indices(b, w1);
  check_word_indices(b, w2);
  FRTEvaluator ev(b);
  return ev.r(w1, w2);
}

Scalar eval_R_inv(const BraidedVS& b, const FRTWord& w1, const FRTWord& w2) {
  check_word_indices(b, w1);
  check_word_indices(b, w2);
  FRTEvaluator ev(b);
  return ev.r_inv(w1, w2);
}

Scalar eval_chi(const BraidedVS& b, const FRTWord& w1, const FRTWord& w2) {
  check_word_indices(b, w1);
  check_word_indices(b, w2);
  AxiomReport rep = check_ibv(b);
  if (!rep.all_pass())
    fail(Err::Input, "infinitesimal braiding axioms fail: " + rep.summary());
  FRTEvaluator ev(b);
  return ev.chi(w1, w2);
}

Scalar canonical_chi(const BraidedVS& b, const FRTWord& w1, const FRTWord& w2) {
  check_word_indices(b, w1);
  check_word_indices(b, w2);
  const std::string not_scalar = "infinitesimal tensor is not a scalar multiple of the identity";
  if (!b.has_t()) fail(Err::Input, not_scalar);
  const Scalar lam = b.tt(0, 0, 0, 0);
  for (int i = 0; i < b.N; ++i)
    for (int j = 0; j < b.N; ++j)
      for (int k = 0; k < b.N; ++k)
        for (int l = 0; l < b.N; ++l) {
          const bool diag = (i == k && j == l);
          if (b.tt(i, j, k, l) != (diag ? lam : Scalar::zero(b.field)))
            fail(Err::Input, not_scalar);
        }
  FRTEvaluator ev(b);
  const Scalar val =
      lam * Scalar((long)(w1.size() * w2.size())) * ev.counit(w1) * ev.counit(w2);
  if (ev.chi(w1, w2) != val)
    fail(Err::Input, "closed form disagrees with the recursive evaluation");
  return val;
}

// ==== descent to the quotient ===============================================

AxiomReport check_descent(const BraidedVS& b, int max_degree) {
  if (max_degree < 2) fail(Err::Input, "max degree must be at least 2");
  const int n = b.N;
  const long long m = (long long)n * n;
  FRTEvaluator ev(b);

  // relation combos embedded into degrees 2..max_degree
  struct Embedded {
    WordCombo combo;
    std::string label;
  };
  std::vector<std::pair<WordCombo, std::string>> rels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          auto tag = [&](const char* kind) {
            return std::string(kind) + "[" + std::to_string(i + 1) +
                   std::to_string(j + 1) + ";" + std::to_string(k + 1) +
                   std::to_string(l + 1) + "]";
          };
          rels.emplace_back(frt_relation_c(b, i, j, k, l), tag("c-rel"));
          if (b.has_t()) rels.emplace_back(frt_relation_t(b, i, j, k, l), tag("t-rel"));
        }
  std::vector<Embedded> ideal;
  for (int d = 2; d <= max_degree; ++d)
    for (int a = 0; a + 2 <= d; ++a) {
      const int bdeg = d - 2 - a;
      long long ua = 1, vb = 1;
      for (int p = 0; p < a; ++p) ua *= m;
      for (int p = 0; p < bdeg; ++p) vb *= m;
      for (long long ui = 0; ui < ua; ++ui) {
        const FRTWord u = frt_word_from_index(ui, a, n);
        for (long long vi = 0; vi < vb; ++vi) {
          const FRTWord v = frt_word_from_index(vi, bdeg, n);
          for (const auto& [rel, label] : rels) {
            if (rel.empty()) continue;
            WordCombo c;
            for (const auto& [w, coef] : rel) {
              FRTWord full = u;
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), v.begin(), v.end());
              c.emplace(std::move(full), coef);
            }
            std::string lbl = label;
            if (!u.empty()) lbl = frt_word_str(u) + "." + lbl;
            if (!v.empty()) lbl = lbl + "." + frt_word_str(v);
            ideal.push_back({std::move(c), std::move(lbl)});
          }
        }
      }
    }

  // partner words of every degree up to the cap
  std::vector<FRTWord> words;
  {
    long long count = 1;
    for (int d = 0; d <= max_degree; ++d) {
      for (long long idx = 0; idx < count; ++idx)
        words.push_back(frt_word_from_index(idx, d, n));
      count *= m;
    }
  }

  AxiomReport rep;
  using EvalFn = Scalar (FRTEvaluator::*)(const FRTWord&, const FRTWord&);
  auto scan = [&](const std::string& name, std::vector<std::pair<EvalFn, const char*>> fns) {
    for (const auto& e : ideal)
      for (const FRTWord& w : words)
        for (const auto& [fn, fname] : fns)
          for (int side = 0; side < 2; ++side) {
            Scalar acc = Scalar::zero(b.field);
            for (const auto& [u, coef] : e.combo)
              acc = acc + coef * (side == 0 ? (ev.*fn)(w, u) : (ev.*fn)(u, w));
            if (!acc.is_zero()) {
              const std::string args = side == 0 ? frt_word_str(w) + " (x) " + e.label
                                                 : e.label + " (x) " + frt_word_str(w);
              rep.axioms.push_back({name, false,
                                    std::string(fname) + "(" + args +
                                        ") = " + scalar_str(acc, b.field)});
              return;
            }
          }
    rep.axioms.push_back({name, true, ""});
  };
  scan("bichar-on-ideal",
       {{&FRTEvaluator::r, "R"}, {&FRTEvaluator::r_inv, "Rinv"}});
  if (b.has_t()) scan("chi-on-ideal", {{&FRTEvaluator::chi, "chi"}});

  // commutation law reduced in the graded quotient
  if (b.has_t()) {
    std::string witness;
    for (int dtot = 2; dtot <= max_degree && witness.empty(); ++dtot) {
      GradedFRT comp = frt_component(b, dtot);
      for (int da = 1; da < dtot && witness.empty(); ++da) {
        const int db = dtot - da;
        long long ca = 1, cb = 1;
        for (int p = 0; p < da; ++p) ca *= m;
        for (int p = 0; p < db; ++p) cb *= m;
        for (long long ai = 0; ai < ca && witness.empty(); ++ai) {
          const FRTWord wa = frt_word_from_index(ai, da, n);
          for (long long bi = 0; bi < cb && witness.empty(); ++bi) {
            const FRTWord wb = frt_word_from_index(bi, db, n);
            SRow vec;
            for_mid(n, da, [&](const std::vector<int>& p) {
              FRTWord a1(wa), a2(wa);
              for (int x = 0; x < da; ++x) {
                a1[(size_t)x].second = p[(size_t)x];
                a2[(size_t)x].first = p[(size_t)x];
              }
              for_mid(n, db, [&](const std::vector<int>& rr) {
                FRTWord b1(wb), b2(wb);
                for (int x = 0; x < db; ++x) {
                  b1[(size_t)x].second = rr[(size_t)x];
                  b2[(size_t)x].first = rr[(size_t)x];
                }
                FRTWord lw = a2;
                lw.insert(lw.end(), b2.begin(), b2.end());
                srow_add_at(vec, frt_flat_index(lw, n), ev.chi(a1, b1));
                FRTWord rw = a1;
                rw.insert(rw.end(), b1.begin(), b1.end());
                srow_add_at(vec, frt_flat_index(rw, n), -ev.chi(a2, b2));
              });
            });
            comp.ideal.reduce(vec);
            if (!vec.empty())
              witness = "at " + frt_word_str(wa) + " (x) " + frt_word_str(wb) +
                        ": residue at " +
                        frt_word_str(frt_word_from_index(vec.begin()->first, dtot, n)) +
                        " = " + scalar_str(vec.begin()->second, b.field);
          }
        }
      }
    }
    rep.axioms.push_back({"commutation-mod-ideal", witness.empty(), witness});
  }
  return rep;
}

// ==== quantum special linear no-go ==========================================

SolutionSpace slq2_chi_obstruction(const Scalar& q) {
  if (q.is_zero()) fail(Err::Input, "parameter must be nonzero");
  const Scalar one = q * q.inverse();
  const Scalar zero = q - q;
  const Scalar qi = q.inverse();
  auto gen = [](int i, int j) { return i * 2 + j; };

  // braiding scaled by the square root of q, so everything stays rational
  std::vector<Scalar> ch(16, zero);
  auto at = [&](int i, int j, int k, int l) -> Scalar& {
    return ch[(size_t)((i * 2 + j) * 2 + k) * 2 + l];
  };
  at(0, 0, 0, 0) = q;
  at(1, 1, 1, 1) = q;
  at(0, 1, 1, 0) = one;
  at(1, 0, 0, 1) = one;
  at(1, 0, 1, 0) = q - qi;
  const std::vector<Scalar> chinv = tensor_inverse(2, zero, one, ch);

  // span of the quadratic relations and the determinant relation inside the
  // degree <= 2 filtration: coordinate 0 is the unit, 1..4 the generators,
  // 5 + 4*g1 + g2 the two-letter monomials
  auto mono2 = [&](int g1, int g2) { return 5 + 4 * g1 + g2; };
  Echelon W(21);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          SRow row;
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
              srow_add_at(row, mono2(gen(a, k), gen(b, l)), at(i, j, a, b));
              srow_add_at(row, mono2(gen(i, a), gen(j, b)), -at(a, b, k, l));
            }
          W.insert(std::move(row));
        }
  {
    SRow det;
    det[mono2(gen(0, 0), gen(1, 1))] = one;
    det[mono2(gen(0, 1), gen(1, 0))] = zero - qi;
    det[0] = zero - one;
    W.insert(std::move(det));
  }

  std::vector<SRow> rows;  // constraints over the 16 generator-pair unknowns

  // commutation law on generator pairs, residues taken mod the relation span
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          std::map<int, SRow> per_unknown;  // unknown -> filtration vector
          for (int k1 = 0; k1 < 2; ++k1)
            for (int k2 = 0; k2 < 2; ++k2) {
              srow_add_at(per_unknown[4 * gen(i1, k1) + gen(i2, k2)],
                          mono2(gen(k1, j1), gen(k2, j2)), one);
              srow_add_at(per_unknown[4 * gen(k1, j1) + gen(k2, j2)],
                          mono2(gen(i1, k1), gen(i2, k2)), -one);
            }
          std::map<int, SRow> by_coord;  // monomial coordinate -> constraint row
          for (auto& [u, vec] : per_unknown) {
            SRow v = vec;
            W.reduce(v);
            for (const auto& [coord, val] : v) srow_add_at(by_coord[coord], u, val);
          }
          for (auto& [coord, rw] : by_coord)
            if (!rw.empty()) rows.push_back(std::move(rw));
        }

  // determinant rows: the value on a (x) alpha delta  -  q^{-1} (value on
  // a (x) beta gamma), both expanded through the hexagon law
  auto expand = [&](int ia, int ja, int kb, int lb, int kc, int lc) {
    SRow out;
    if (kc == lc) srow_add_at(out, 4 * gen(ia, ja) + gen(kb, lb), one);
    for (int p = 0; p < 2; ++p)
      for (int r = 0; r < 2; ++r)
        for (int mm = 0; mm < 2; ++mm) {
          const Scalar coef =
              chinv[(size_t)((ia * 2 + kb) * 2 + mm) * 2 + p] * at(mm, r, ja, lb);
          srow_add_at(out, 4 * gen(p, r) + gen(kc, lc), coef);
        }
    return out;
  };
  for (int ia = 0; ia < 2; ++ia)
    for (int ja = 0; ja < 2; ++ja) {
      SRow row = expand(ia, ja, 0, 0, 1, 1);
      srow_axpy(row, zero - qi, expand(ia, ja, 0, 1, 1, 0));
      if (!row.empty()) rows.push_back(std::move(row));
    }

  return nullspace(16, rows);
}

// ==== induced structure on comodules ========================================

BraidedVS ibv_from_precartier(const InfRForm& inf, const CoactionData& co) {
  const FinBialgebra& h = inf.cq.H;
  const int hd = h.dim(), vd = co.vdim;
  if (vd <= 0 || (int)co.delta.size() != vd)
    fail(Err::Input, "coaction table size mismatch");
  for (const auto& terms : co.delta)
    for (const auto& tm : terms)
      if (tm.h < 0 || tm.h >= hd || tm.v < 0 || tm.v >= vd)
        fail(Err::Input, "coaction index out of range");
  const Field& f = h.field;
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);

  // counit law
  for (int a = 0; a < vd; ++a) {
    std::vector<Scalar> acc((size_t)vd, zero);
    for (const auto& tm : co.delta[(size_t)a])
      acc[(size_t)tm.v] = acc[(size_t)tm.v] + tm.c * h.counit[(size_t)tm.h];
    for (int v = 0; v < vd; ++v)
      if (acc[(size_t)v] != (v == a ? one : zero))
        fail(Err::Input, "coaction counit law fails at basis " + std::to_string(a));
  }
  // coassociativity
  for (int a = 0; a < vd; ++a) {
    std::map<std::tuple<int, int, int>, Scalar> lhs, rhs;
    auto accum = [](std::map<std::tuple<int, int, int>, Scalar>& m,
                    std::tuple<int, int, int> k, const Scalar& v) {
      if (v.is_zero()) return;
      auto it = m.find(k);
      if (it == m.end()) {
        m.emplace(k, v);
        return;
      }
      it->second = it->second + v;
      if (it->second.is_zero()) m.erase(it);
    };
    for (const auto& tm : co.delta[(size_t)a])
      for (const auto& ct : h.comul[(size_t)tm.h])
        accum(lhs, {ct.j, ct.k, tm.v}, tm.c * ct.c);
    for (const auto& tm : co.delta[(size_t)a])
      for (const auto& tm2 : co.delta[(size_t)tm.v])
        accum(rhs, {tm.h, tm2.h, tm2.v}, tm.c * tm2.c);
    if (lhs != rhs)
      fail(Err::Input, "coaction coassociativity fails at basis " + std::to_string(a));
  }

  std::vector<Scalar> cc((size_t)vd * vd * vd * vd, zero);
  std::vector<Scalar> tt((size_t)vd * vd * vd * vd, zero);
  for (int a = 0; a < vd; ++a)
    for (int b = 0; b < vd; ++b)
      for (const auto& ta : co.delta[(size_t)a])
        for (const auto& tb : co.delta[(size_t)b]) {
          const Scalar w = ta.c * tb.c;
          const size_t ic = (size_t)((a * vd + b) * vd + tb.v) * vd + ta.v;
          cc[ic] = cc[ic] + w * mf_value2(inf.cq.R, tb.h, ta.h);
          const size_t it = (size_t)((a * vd + b) * vd + ta.v) * vd + tb.v;
          tt[it] = tt[it] + w * mf_value2(inf.chi, ta.h, tb.h);
        }
  BraidedVS out = make_braided_vs(vd, f, std::move(cc), std::move(tt));
  AxiomReport rep = check_ibv(out);
  if (!rep.all_pass())
    fail(Err::Input,
         "induced tensors fail the infinitesimal braiding axioms: " + rep.summary());
  return out;
}

// ==== stock example =========================================================

BraidedVS mq2_braided_vs(const Scalar& lambda) {
  const Field f = field_rational_functions("s");
  const Scalar s = Scalar::variable(f);
  const Scalar si = s.inverse();
  const Scalar zero = Scalar::zero(f);
  std::vector<Scalar> c(16, zero);
  auto at = [&](int i, int j, int k, int l) -> Scalar& {
    return c[(size_t)((i * 2 + j) * 2 + k) * 2 + l];
  };
  at(0, 0, 0, 0) = s;
  at(1, 1, 1, 1) = s;
  at(0, 1, 1, 0) = si;
  at(1, 0, 0, 1) = si;
  at(1, 0, 1, 0) = si * (s * s - si * si);
  std::vector<Scalar> t(16, zero);
  const Scalar lam = lift_to(lambda, f);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t[(size_t)((i * 2 + j) * 2 + i) * 2 + j] = lam;
  return make_braided_vs(2, f, std::move(c), std::move(t));
}

}  // namespace ibraid
