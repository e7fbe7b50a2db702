#include "ibraid/tensor.hpp"

#include <algorithm>
#include <functional>

namespace ibraid {

namespace {

long flat_of(const std::vector<int>& key, int n) {
  long f = 0;
  for (int i : key) f = f * n + i;
  return f;
}

std::vector<int> key_of(long flat, int n, int order) {
  std::vector<int> key(order, 0);
  for (int a = order - 1; a >= 0; --a) {
    key[a] = (int)(flat % n);
    flat /= n;
  }
  return key;
}

long ipow(int n, int k) {
  long r = 1;
  while (k-- > 0) r *= n;
  return r;
}

void check_leg(int order, int leg) {
  if (leg < 1 || leg > order) fail(Err::Input, "leg index out of range");
}

}  // namespace

// ==== constructors ==========================================================

TensorElement te_zero(const FinBialgebra& h, int order) {
  if (order < 0) fail(Err::Input, "tensor order must be >= 0");
  return TensorElement{h.dim(), order, {}};
}

TensorElement te_unit(const FinBialgebra& h, int order) {
  TensorElement t = te_zero(h, order);
  // distribute the (possibly non-basis) unit vector over every leg
  std::vector<std::pair<std::vector<int>, Scalar>> acc{{{}, Scalar(1)}};
  for (int l = 0; l < order; ++l) {
    std::vector<std::pair<std::vector<int>, Scalar>> next;
    for (const auto& [key, c] : acc)
      for (const auto& [i, u] : h.unit) {
        auto k2 = key;
        k2.push_back(i);
        next.push_back({std::move(k2), c * u});
      }
    acc = std::move(next);
  }
  for (auto& [key, c] : acc) te_accum(t, key, c);
  return t;
}

TensorElement te_basis(const FinBialgebra& h, std::vector<int> tuple) {
  TensorElement t = te_zero(h, (int)tuple.size());
  for (int i : tuple)
    if (i < 0 || i >= h.dim()) fail(Err::Input, "basis tuple index out of range");
  t.c.emplace(std::move(tuple), Scalar(1));
  return t;
}

TensorElement te_from_matrix(const FinBialgebra& h,
                             const std::vector<std::vector<Scalar>>& m) {
  TensorElement t = te_zero(h, 2);
  const int n = h.dim();
  if ((int)m.size() != n) fail(Err::Input, "coefficient matrix has wrong size");
  for (int i = 0; i < n; ++i) {
    if ((int)m[i].size() != n) fail(Err::Input, "coefficient matrix has wrong size");
    for (int j = 0; j < n; ++j) te_accum(t, {i, j}, m[i][j]);
  }
  return t;
}

// ==== linear structure ======================================================

void te_accum(TensorElement& t, const std::vector<int>& key, const Scalar& c) {
  if (c.is_zero()) return;
  if ((int)key.size() != t.order) fail(Err::Input, "tensor key has wrong order");
  auto it = t.c.find(key);
  if (it == t.c.end()) {
    t.c.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t.c.erase(it);
  }
}

TensorElement te_add(const TensorElement& a, const TensorElement& b) {
  if (a.n != b.n || a.order != b.order) fail(Err::Input, "tensor shape mismatch");
  TensorElement r = a;
  for (const auto& [key, c] : b.c) te_accum(r, key, c);
  return r;
}

TensorElement te_sub(const TensorElement& a, const TensorElement& b) {
  if (a.n != b.n || a.order != b.order) fail(Err::Input, "tensor shape mismatch");
  TensorElement r = a;
  for (const auto& [key, c] : b.c) te_accum(r, key, -c);
  return r;
}

TensorElement te_neg(const TensorElement& a) {
  TensorElement r = a;
  for (auto& [key, c] : r.c) c = -c;
  return r;
}

TensorElement te_scale(const TensorElement& a, const Scalar& s) {
  TensorElement r{a.n, a.order, {}};
  if (s.is_zero()) return r;
  for (const auto& [key, c] : a.c) {
    Scalar v = c * s;
    if (!v.is_zero()) r.c.emplace(key, std::move(v));
  }
  return r;
}

bool te_eq(const TensorElement& a, const TensorElement& b) {
  return a.n == b.n && a.order == b.order && a.c == b.c;
}

Scalar te_coeff(const TensorElement& a, const std::vector<int>& key) {
  auto it = a.c.find(key);
  return it == a.c.end() ? Scalar(0) : it->second;
}

// ==== multiplicative structure ==============================================

TensorElement tensor_mul(const FinBialgebra& h, const TensorElement& a,
                         const TensorElement& b) {
  if (a.n != h.dim() || b.n != h.dim()) fail(Err::Input, "tensor from another parent");
  if (a.order != b.order) fail(Err::Input, "tensor order mismatch");
  TensorElement r = te_zero(h, a.order);
  for (const auto& [ka, ca] : a.c)
    for (const auto& [kb, cb] : b.c) {
      // expand the product leg by leg
      std::vector<std::pair<std::vector<int>, Scalar>> acc{{{}, ca * cb}};
      for (int l = 0; l < a.order; ++l) {
        std::vector<std::pair<std::vector<int>, Scalar>> next;
        for (const auto& [key, c] : acc)
          for (const auto& [k, m] : h.mul_at(ka[l], kb[l])) {
            Scalar v = c * m;
            if (v.is_zero()) continue;
            auto k2 = key;
            k2.push_back(k);
            next.push_back({std::move(k2), std::move(v)});
          }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      for (auto& [key, c] : acc) te_accum(r, key, c);
    }
  return r;
}

TensorElement leg_embed(const FinBialgebra& h, const TensorElement& a, int k,
                        const std::vector<int>& legs) {
  if ((int)legs.size() != a.order) fail(Err::Input, "leg_embed: leg count mismatch");
  for (size_t i = 0; i < legs.size(); ++i) {
    if (legs[i] < 1 || legs[i] > k) fail(Err::Input, "leg_embed: leg out of range");
    if (i > 0 && legs[i] <= legs[i - 1]) fail(Err::Input, "leg_embed: legs must increase");
  }
  std::vector<int> spot(k, -1);  // position in a's key, or -1 for a unit slot
  for (size_t i = 0; i < legs.size(); ++i) spot[legs[i] - 1] = (int)i;
  TensorElement r = te_zero(h, k);
  for (const auto& [key, c] : a.c) {
    std::vector<std::pair<std::vector<int>, Scalar>> acc{{{}, c}};
    for (int l = 0; l < k; ++l) {
      std::vector<std::pair<std::vector<int>, Scalar>> next;
      for (const auto& [kk, cc] : acc) {
        if (spot[l] >= 0) {
          auto k2 = kk;
          k2.push_back(key[spot[l]]);
          next.push_back({std::move(k2), cc});
        } else {
          for (const auto& [i, u] : h.unit) {
            auto k2 = kk;
            k2.push_back(i);
            next.push_back({std::move(k2), cc * u});
          }
        }
      }
      acc = std::move(next);
    }
    for (auto& [kk, cc] : acc) te_accum(r, kk, cc);
  }
  return r;
}

TensorElement leg_permute(const TensorElement& a, const std::vector<int>& perm) {
  if ((int)perm.size() != a.order) fail(Err::Input, "permutation size mismatch");
  TensorElement r{a.n, a.order, {}};
  for (const auto& [key, c] : a.c) {
    std::vector<int> k2(a.order);
    for (int t = 0; t < a.order; ++t) k2[t] = key[perm[t]];
    te_accum(r, k2, c);
  }
  return r;
}

TensorElement flip_op(const TensorElement& a) {
  if (a.order != 2) fail(Err::Input, "flip_op needs order 2");
  return leg_permute(a, {1, 0});
}

TensorElement apply_coproduct_leg(const FinBialgebra& h, const TensorElement& a, int leg) {
  check_leg(a.order, leg);
  TensorElement r = te_zero(h, a.order + 1);
  for (const auto& [key, c] : a.c)
    for (const auto& t : h.comul[key[leg - 1]]) {
      std::vector<int> k2;
      k2.reserve(a.order + 1);
      k2.insert(k2.end(), key.begin(), key.begin() + (leg - 1));
      k2.push_back(t.j);
      k2.push_back(t.k);
      k2.insert(k2.end(), key.begin() + leg, key.end());
      te_accum(r, k2, c * t.c);
    }
  return r;
}

TensorElement apply_counit_leg(const FinBialgebra& h, const TensorElement& a, int leg) {
  check_leg(a.order, leg);
  TensorElement r = te_zero(h, a.order - 1);
  for (const auto& [key, c] : a.c) {
    Scalar v = c * h.counit[key[leg - 1]];
    if (v.is_zero()) continue;
    std::vector<int> k2;
    k2.reserve(a.order - 1);
    k2.insert(k2.end(), key.begin(), key.begin() + (leg - 1));
    k2.insert(k2.end(), key.begin() + leg, key.end());
    te_accum(r, k2, v);
  }
  return r;
}

TensorElement apply_antipode_leg(const FinBialgebra& h, const TensorElement& a, int leg) {
  check_leg(a.order, leg);
  if (!h.antipode) fail(Err::Input, "bialgebra '" + h.name + "' has no antipode");
  const auto& s = *h.antipode;
  TensorElement r = te_zero(h, a.order);
  for (const auto& [key, c] : a.c) {
    int j = key[leg - 1];
    for (int i = 0; i < h.dim(); ++i) {
      Scalar v = c * s[i][j];
      if (v.is_zero()) continue;
      auto k2 = key;
      k2[leg - 1] = i;
      te_accum(r, k2, v);
    }
  }
  return r;
}

TensorElement apply_mul_legs(const FinBialgebra& h, const TensorElement& a, int leg) {
  if (a.order < 2) fail(Err::Input, "apply_mul_legs needs order >= 2");
  if (leg < 1 || leg > a.order - 1) fail(Err::Input, "leg index out of range");
  TensorElement r = te_zero(h, a.order - 1);
  for (const auto& [key, c] : a.c)
    for (const auto& [k, m] : h.mul_at(key[leg - 1], key[leg])) {
      std::vector<int> k2;
      k2.reserve(a.order - 1);
      k2.insert(k2.end(), key.begin(), key.begin() + (leg - 1));
      k2.push_back(k);
      k2.insert(k2.end(), key.begin() + leg + 1, key.end());
      te_accum(r, k2, c * m);
    }
  return r;
}

TensorElement te_map_legs(const TensorElement& a,
                          const std::vector<std::vector<Scalar>>& f, int out_dim) {
  TensorElement r{out_dim, a.order, {}};
  for (const auto& [key, c] : a.c) {
    std::vector<std::pair<std::vector<int>, Scalar>> acc{{{}, c}};
    for (int l = 0; l < a.order; ++l) {
      std::vector<std::pair<std::vector<int>, Scalar>> next;
      for (const auto& [kk, cc] : acc)
        for (int i = 0; i < out_dim; ++i) {
          Scalar v = cc * f[i][key[l]];
          if (v.is_zero()) continue;
          auto k2 = kk;
          k2.push_back(i);
          next.push_back({std::move(k2), std::move(v)});
        }
      acc = std::move(next);
    }
    for (auto& [kk, cc] : acc) {
      if ((int)kk.size() != a.order) continue;
      auto it = r.c.find(kk);
      if (it == r.c.end()) {
        r.c.emplace(kk, cc);
      } else {
        it->second = it->second + cc;
        if (it->second.is_zero()) r.c.erase(it);
      }
    }
  }
  return r;
}

TensorElement invert_in_tensor_algebra(const FinBialgebra& h, const TensorElement& a) {
  const int n = h.dim();
  const long big = ipow(n, a.order);
  std::vector<std::vector<Scalar>> mat((size_t)big, std::vector<Scalar>((size_t)big, Scalar(0)));
  for (long col = 0; col < big; ++col) {
    TensorElement prod = tensor_mul(h, a, te_basis(h, key_of(col, n, a.order)));
    for (const auto& [key, c] : prod.c) mat[(size_t)flat_of(key, n)][(size_t)col] = c;
  }
  TensorElement one = te_unit(h, a.order);
  std::vector<Scalar> rhs((size_t)big, Scalar::zero(h.field));
  for (const auto& [key, c] : one.c) rhs[(size_t)flat_of(key, n)] = c;
  std::vector<Scalar> x;
  try {
    x = solve_unit_pivot(std::move(mat), std::move(rhs));
  } catch (const Error&) {
    fail(Err::NotInvertible, "element has no inverse in the tensor algebra");
  }
  TensorElement inv = te_zero(h, a.order);
  for (long i = 0; i < big; ++i) te_accum(inv, key_of(i, n, a.order), x[(size_t)i]);
  if (!te_eq(tensor_mul(h, a, inv), one) || !te_eq(tensor_mul(h, inv, a), one))
    fail(Err::NotInvertible, "element has only a one-sided inverse");
  return inv;
}

TensorElement te_delta_power(const FinBialgebra& h, int i, int m) {
  TensorElement t = te_basis(h, {i});
  for (int s = 0; s < m; ++s) t = apply_coproduct_leg(h, t, 1);
  return t;
}

TensorElement te_lift(const TensorElement& a, const Field& f) {
  TensorElement r{a.n, a.order, {}};
  for (const auto& [key, c] : a.c) r.c.emplace(key, lift_to(c, f));
  return r;
}

TensorElement te_jet_slice(const TensorElement& a, int k) {
  TensorElement r{a.n, a.order, {}};
  for (const auto& [key, c] : a.c) {
    Scalar v{c.jet_coeff(k)};
    if (!v.is_zero()) r.c.emplace(key, std::move(v));
  }
  return r;
}

// ==== rendering =============================================================

namespace {

std::string coeff_prefix(const Scalar& c, const Field& f, bool& negated) {
  negated = false;
  if (c.is_one()) return "";
  Scalar mc = -c;
  if (mc.is_one()) {
    negated = true;
    return "";
  }
  std::string s = scalar_str(c, f);
  if (s.find(' ') != std::string::npos || s.find('/') != std::string::npos) s = "(" + s + ")";
  if (!s.empty() && s[0] == '-') {
    negated = true;
    s = scalar_str(mc, f);
    if (s.find(' ') != std::string::npos || s.find('/') != std::string::npos) s = "(" + s + ")";
  }
  return s + "*";
}

std::string key_label(const FinBialgebra& h, const std::vector<int>& key) {
  if (key.empty()) return "()";
  std::string out;
  for (size_t i = 0; i < key.size(); ++i) {
    if (i) out += "⊗";  // tensor sign
    out += h.basis[key[i]];
  }
  return out;
}

std::string sparse_str(const FinBialgebra& h,
                       const std::map<std::vector<int>, Scalar>& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, v] : c) {
    bool neg = false;
    std::string pre = coeff_prefix(v, h.field, neg);
    if (first) {
      out += neg ? "-" : "";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += pre + key_label(h, key);
  }
  return out;
}

}  // namespace

std::string te_str(const FinBialgebra& h, const TensorElement& a) {
  return sparse_str(h, a.c);
}

// ==== forms =================================================================

MultiForm mf_zero(const FinBialgebra& h, int order) {
  if (order < 1) fail(Err::Input, "form order must be >= 1");
  return MultiForm{h.dim(), order, {}};
}

MultiForm mf_counit(const FinBialgebra& h, int order) {
  MultiForm f = mf_zero(h, order);
  const int n = h.dim();
  std::function<void(std::vector<int>&, const Scalar&)> rec =
      [&](std::vector<int>& key, const Scalar& c) {
        if ((int)key.size() == order) {
          mf_accum(f, key, c);
          return;
        }
        for (int i = 0; i < n; ++i) {
          Scalar v = c * h.counit[i];
          if (v.is_zero()) continue;
          key.push_back(i);
          rec(key, v);
          key.pop_back();
        }
      };
  std::vector<int> key;
  rec(key, Scalar(1));
  return f;
}

MultiForm mf_from_matrix(const FinBialgebra& h,
                         const std::vector<std::vector<Scalar>>& m) {
  MultiForm f = mf_zero(h, 2);
  const int n = h.dim();
  if ((int)m.size() != n) fail(Err::Input, "form matrix has wrong size");
  for (int i = 0; i < n; ++i) {
    if ((int)m[i].size() != n) fail(Err::Input, "form matrix has wrong size");
    for (int j = 0; j < n; ++j) mf_accum(f, {i, j}, m[i][j]);
  }
  return f;
}

void mf_accum(MultiForm& f, const std::vector<int>& key, const Scalar& c) {
  if (c.is_zero()) return;
  if ((int)key.size() != f.order) fail(Err::Input, "form key has wrong order");
  auto it = f.c.find(key);
  if (it == f.c.end()) {
    f.c.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) f.c.erase(it);
  }
}

MultiForm mf_add(const MultiForm& a, const MultiForm& b) {
  if (a.n != b.n || a.order != b.order) fail(Err::Input, "form shape mismatch");
  MultiForm r = a;
  for (const auto& [key, c] : b.c) mf_accum(r, key, c);
  return r;
}

MultiForm mf_sub(const MultiForm& a, const MultiForm& b) {
  MultiForm nb = b;
  for (auto& [key, c] : nb.c) c = -c;
  return mf_add(a, nb);
}

MultiForm mf_neg(const MultiForm& a) {
  MultiForm r = a;
  for (auto& [key, c] : r.c) c = -c;
  return r;
}

MultiForm mf_scale(const MultiForm& a, const Scalar& s) {
  MultiForm r{a.n, a.order, {}};
  if (s.is_zero()) return r;
  for (const auto& [key, c] : a.c) {
    Scalar v = c * s;
    if (!v.is_zero()) r.c.emplace(key, std::move(v));
  }
  return r;
}

bool mf_eq(const MultiForm& a, const MultiForm& b) {
  return a.n == b.n && a.order == b.order && a.c == b.c;
}

Scalar mf_value(const MultiForm& f, const std::vector<int>& tuple) {
  auto it = f.c.find(tuple);
  return it == f.c.end() ? Scalar(0) : it->second;
}

Scalar mf_value2(const MultiForm& f, int i, int j) { return mf_value(f, {i, j}); }

Scalar mf_pair(const MultiForm& f, const TensorElement& a) {
  if (f.n != a.n || f.order != a.order) fail(Err::Input, "pairing shape mismatch");
  Scalar acc(0);
  const auto& small = f.c.size() < a.c.size() ? f.c : a.c;
  const auto& large = f.c.size() < a.c.size() ? a.c : f.c;
  for (const auto& [key, c] : small) {
    auto it = large.find(key);
    if (it != large.end()) acc = acc + c * it->second;
  }
  return acc;
}

Scalar mf_value_on(const FinBialgebra& h, const MultiForm& f,
                   const std::vector<SVec>& args) {
  if ((int)args.size() != f.order) fail(Err::Input, "form arity mismatch");
  Scalar acc = Scalar::zero(h.field);
  std::function<void(size_t, std::vector<int>&, const Scalar&)> rec =
      [&](size_t pos, std::vector<int>& key, const Scalar& c) {
        if (pos == args.size()) {
          acc = acc + c * mf_value(f, key);
          return;
        }
        for (const auto& [i, v] : args[pos]) {
          key.push_back(i);
          rec(pos + 1, key, c * v);
          key.pop_back();
        }
      };
  std::vector<int> key;
  rec(0, key, Scalar(1));
  return acc;
}

MultiForm convolution_mul(const FinBialgebra& h, const MultiForm& f, const MultiForm& g) {
  if (f.n != h.dim() || g.n != h.dim()) fail(Err::Input, "form from another parent");
  if (f.order != g.order) fail(Err::Input, "form order mismatch");
  const int n = h.dim();
  const int k = f.order;
  MultiForm r = mf_zero(h, k);
  if (f.is_zero() || g.is_zero()) return r;
  std::vector<int> tuple(k, 0);
  std::function<void(int)> each_tuple = [&](int pos) {
    if (pos == k) {
      // expand the coproduct leg by leg, pairing first halves with f
      Scalar total(0);
      std::function<void(int, std::vector<int>&, std::vector<int>&, const Scalar&)> split =
          [&](int l, std::vector<int>& k1, std::vector<int>& k2, const Scalar& c) {
            if (l == k) {
              Scalar fv = mf_value(f, k1);
              if (fv.is_zero()) return;
              Scalar gv = mf_value(g, k2);
              if (gv.is_zero()) return;
              total = total + c * fv * gv;
              return;
            }
            for (const auto& t : h.comul[tuple[l]]) {
              k1.push_back(t.j);
              k2.push_back(t.k);
              split(l + 1, k1, k2, c * t.c);
              k1.pop_back();
              k2.pop_back();
            }
          };
      std::vector<int> k1, k2;
      split(0, k1, k2, Scalar(1));
      mf_accum(r, tuple, total);
      return;
    }
    for (int i = 0; i < n; ++i) {
      tuple[pos] = i;
      each_tuple(pos + 1);
    }
  };
  each_tuple(0);
  return r;
}

MultiForm convolution_invert(const FinBialgebra& h, const MultiForm& f) {
  const int n = h.dim();
  const int k = f.order;
  const long big = ipow(n, k);
  // matrix of (f * _) in the coordinates of the unknown form
  std::vector<std::vector<Scalar>> mat((size_t)big, std::vector<Scalar>((size_t)big, Scalar(0)));
  std::vector<Scalar> rhs((size_t)big, Scalar::zero(h.field));
  MultiForm eps = mf_counit(h, k);
  for (long row = 0; row < big; ++row) {
    std::vector<int> tuple = key_of(row, n, k);
    rhs[(size_t)row] = mf_value(eps, tuple);
    std::function<void(int, std::vector<int>&, std::vector<int>&, const Scalar&)> split =
        [&](int l, std::vector<int>& k1, std::vector<int>& k2, const Scalar& c) {
          if (l == k) {
            Scalar fv = mf_value(f, k1);
            if (fv.is_zero()) return;
            auto& cell = mat[(size_t)row][(size_t)flat_of(k2, n)];
            cell = cell + c * fv;
            return;
          }
          for (const auto& t : h.comul[tuple[l]]) {
            k1.push_back(t.j);
            k2.push_back(t.k);
            split(l + 1, k1, k2, c * t.c);
            k1.pop_back();
            k2.pop_back();
          }
        };
    std::vector<int> k1, k2;
    split(0, k1, k2, Scalar(1));
  }
  std::vector<Scalar> x;
  try {
    x = solve_unit_pivot(std::move(mat), std::move(rhs));
  } catch (const Error&) {
    fail(Err::NotConvInvertible, "form has no convolution inverse");
  }
  MultiForm g = mf_zero(h, k);
  for (long i = 0; i < big; ++i) mf_accum(g, key_of(i, n, k), x[(size_t)i]);
  if (!mf_eq(convolution_mul(h, f, g), eps) || !mf_eq(convolution_mul(h, g, f), eps))
    fail(Err::NotConvInvertible, "form has only a one-sided convolution inverse");
  return g;
}

MultiForm mf_embed(const FinBialgebra& h, const MultiForm& f, int k,
                   const std::vector<int>& legs) {
  if ((int)legs.size() != f.order) fail(Err::Input, "mf_embed: leg count mismatch");
  for (size_t i = 0; i < legs.size(); ++i) {
    if (legs[i] < 1 || legs[i] > k) fail(Err::Input, "mf_embed: leg out of range");
    if (i > 0 && legs[i] <= legs[i - 1]) fail(Err::Input, "mf_embed: legs must increase");
  }
  std::vector<int> spot(k, -1);
  for (size_t i = 0; i < legs.size(); ++i) spot[legs[i] - 1] = (int)i;
  MultiForm r = mf_zero(h, k);
  const int n = h.dim();
  for (const auto& [key, c] : f.c) {
    std::function<void(int, std::vector<int>&, const Scalar&)> rec =
        [&](int l, std::vector<int>& kk, const Scalar& cc) {
          if (l == k) {
            mf_accum(r, kk, cc);
            return;
          }
          if (spot[l] >= 0) {
            kk.push_back(key[spot[l]]);
            rec(l + 1, kk, cc);
            kk.pop_back();
          } else {
            for (int i = 0; i < n; ++i) {
              Scalar v = cc * h.counit[i];
              if (v.is_zero()) continue;
              kk.push_back(i);
              rec(l + 1, kk, v);
              kk.pop_back();
            }
          }
        };
    std::vector<int> kk;
    rec(0, kk, c);
  }
  return r;
}

MultiForm mf_flip(const MultiForm& f) {
  if (f.order != 2) fail(Err::Input, "mf_flip needs order 2");
  MultiForm r{f.n, 2, {}};
  for (const auto& [key, c] : f.c) r.c.emplace(std::vector<int>{key[1], key[0]}, c);
  return r;
}

MultiForm mf_precompose_antipode(const FinBialgebra& h, const MultiForm& f, int leg) {
  check_leg(f.order, leg);
  if (!h.antipode) fail(Err::Input, "bialgebra '" + h.name + "' has no antipode");
  const auto& s = *h.antipode;
  MultiForm r = mf_zero(h, f.order);
  for (const auto& [key, c] : f.c) {
    int i = key[leg - 1];
    for (int j = 0; j < h.dim(); ++j) {
      Scalar v = c * s[i][j];
      if (v.is_zero()) continue;
      auto k2 = key;
      k2[leg - 1] = j;
      mf_accum(r, k2, v);
    }
  }
  return r;
}

MultiForm mf_precompose_mul(const FinBialgebra& h, const MultiForm& f, int leg) {
  if (leg < 1 || leg > f.order) fail(Err::Input, "mf_precompose_mul: bad leg");
  MultiForm r = mf_zero(h, f.order + 1);
  int n = h.dim();
  for (const auto& [key, c] : f.c) {
    int target = key[leg - 1];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& [p, mc] : h.mul_at(i, j)) {
          if (p != target) continue;
          std::vector<int> k2;
          k2.reserve(f.order + 1);
          k2.insert(k2.end(), key.begin(), key.begin() + (leg - 1));
          k2.push_back(i);
          k2.push_back(j);
          k2.insert(k2.end(), key.begin() + leg, key.end());
          mf_accum(r, k2, c * mc);
        }
  }
  return r;
}

std::string mf_str(const FinBialgebra& h, const MultiForm& f) {
  return sparse_str(h, f.c);
}

}  // namespace ibraid
