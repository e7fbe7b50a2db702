#include "ibraid/bialgebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ibraid {

// ==== sparse vector helpers =================================================

SVec svec_from(const SRow& r) {
  SVec v;
  v.reserve(r.size());
  for (const auto& [i, c] : r) v.push_back({i, c});
  return v;
}

SRow srow_from(const SVec& v) {
  SRow r;
  for (const auto& [i, c] : v) r.emplace(i, c);
  return r;
}

void svec_accum(SVec& v, int i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const auto& p, int key) { return p.first < key; });
  if (it != v.end() && it->first == i) {
    it->second = it->second + c;
    if (it->second.is_zero()) v.erase(it);
  } else {
    v.insert(it, {i, c});
  }
}

SVec svec_add(const SVec& a, const SVec& b) {
  SVec r = a;
  for (const auto& [i, c] : b) svec_accum(r, i, c);
  return r;
}

SVec svec_scale(const SVec& a, const Scalar& c) {
  SVec r;
  if (c.is_zero()) return r;
  for (const auto& [i, x] : a) {
    Scalar y = x * c;
    if (!y.is_zero()) r.push_back({i, y});
  }
  return r;
}

bool svec_eq(const SVec& a, const SVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
  return true;
}

// ==== structural checks =====================================================

void check_wellformed(const FinBialgebra& h) {
  const int n = h.dim();
  if (n == 0) fail(Err::Input, "bialgebra '" + h.name + "': empty basis");
  std::set<std::string> labels(h.basis.begin(), h.basis.end());
  if ((int)labels.size() != n)
    fail(Err::Input, "bialgebra '" + h.name + "': duplicate basis labels");
  if ((int)h.mul.size() != n * n)
    fail(Err::Input, "bialgebra '" + h.name + "': mul table has wrong size");
  if ((int)h.comul.size() != n)
    fail(Err::Input, "bialgebra '" + h.name + "': comul table has wrong size");
  if ((int)h.counit.size() != n)
    fail(Err::Input, "bialgebra '" + h.name + "': counit has wrong size");
  auto idx_ok = [n](int i) { return i >= 0 && i < n; };
  for (const auto& cell : h.mul)
    for (const auto& [k, c] : cell)
      if (!idx_ok(k)) fail(Err::Input, "bialgebra '" + h.name + "': mul index out of range");
  for (const auto& terms : h.comul)
    for (const auto& t : terms)
      if (!idx_ok(t.j) || !idx_ok(t.k))
        fail(Err::Input, "bialgebra '" + h.name + "': comul index out of range");
  for (const auto& [i, c] : h.unit)
    if (!idx_ok(i)) fail(Err::Input, "bialgebra '" + h.name + "': unit index out of range");
  if (h.antipode) {
    if ((int)h.antipode->size() != n)
      fail(Err::Input, "bialgebra '" + h.name + "': antipode has wrong size");
    for (const auto& row : *h.antipode)
      if ((int)row.size() != n)
        fail(Err::Input, "bialgebra '" + h.name + "': antipode row has wrong size");
  }
}

// ==== element helpers =======================================================

SVec mul_vec(const FinBialgebra& h, const SVec& a, const SVec& b) {
  SVec r;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) {
      Scalar c = ca * cb;
      for (const auto& [k, m] : h.mul_at(i, j)) svec_accum(r, k, c * m);
    }
  return r;
}

SVec antipode_vec(const FinBialgebra& h, const SVec& a) {
  if (!h.antipode) fail(Err::Input, "bialgebra '" + h.name + "' has no antipode");
  SVec r;
  const auto& s = *h.antipode;
  for (const auto& [j, c] : a)
    for (int i = 0; i < h.dim(); ++i) svec_accum(r, i, c * s[i][j]);
  return r;
}

Scalar counit_vec(const FinBialgebra& h, const SVec& a) {
  Scalar acc = Scalar::zero(h.field);
  for (const auto& [i, c] : a) acc = acc + c * h.counit[i];
  return acc;
}

FinBialgebra lift_bialgebra(const FinBialgebra& h, const Field& field) {
  FinBialgebra g;
  g.field = field;
  g.name = h.name;
  g.basis = h.basis;
  g.mul.reserve(h.mul.size());
  for (const auto& cell : h.mul) {
    SVec v;
    v.reserve(cell.size());
    for (const auto& [i, c] : cell) v.emplace_back(i, lift_to(c, field));
    g.mul.push_back(std::move(v));
  }
  g.comul.reserve(h.comul.size());
  for (const auto& terms : h.comul) {
    std::vector<ComulTerm> t;
    t.reserve(terms.size());
    for (const auto& ct : terms) t.push_back({ct.j, ct.k, lift_to(ct.c, field)});
    g.comul.push_back(std::move(t));
  }
  for (const auto& [i, c] : h.unit) g.unit.emplace_back(i, lift_to(c, field));
  g.counit.reserve(h.counit.size());
  for (const auto& c : h.counit) g.counit.push_back(lift_to(c, field));
  if (h.antipode) {
    auto s = *h.antipode;
    for (auto& row : s)
      for (auto& c : row) c = lift_to(c, field);
    g.antipode = std::move(s);
  }
  return g;
}

// ==== axiom report ==========================================================

bool AxiomReport::all_pass() const {
  for (const auto& r : axioms)
    if (!r.pass) return false;
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& r : axioms)
    if (r.axiom == name) return &r;
  return nullptr;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& r : axioms) {
    os << (r.pass ? "pass" : "FAIL") << "  " << r.axiom;
    if (!r.pass && !r.witness.empty()) os << "  [" << r.witness << "]";
    os << "\n";
  }
  return os.str();
}

// ==== validator =============================================================

namespace {

// dense order-2 and order-3 tensors as flat coordinate maps keyed by tuple
using T2 = std::map<std::pair<int, int>, Scalar>;
using T3 = std::map<std::tuple<int, int, int>, Scalar>;

void t2_accum(T2& t, int i, int j, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t.erase(it);
  }
}

void t3_accum(T3& t, int i, int j, int k, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_tuple(i, j, k);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t.erase(it);
  }
}

std::string tuple_witness(const FinBialgebra& h, std::initializer_list<int> idx) {
  std::string out;
  for (int i : idx) {
    if (!out.empty()) out += ", ";
    out += h.basis[i];
  }
  return out;
}

}  // namespace

AxiomReport validate_bialgebra(const FinBialgebra& h) {
  check_wellformed(h);
  const int n = h.dim();
  AxiomReport rep;

  // -- associativity: (ei ej) ek == ei (ej ek)
  {
    AxiomResult r{"associativity", true, ""};
    for (int i = 0; i < n && r.pass; ++i)
      for (int j = 0; j < n && r.pass; ++j)
        for (int k = 0; k < n && r.pass; ++k) {
          SVec lhs = mul_vec(h, h.mul_at(i, j), SVec{{k, Scalar(1)}});
          SVec rhs = mul_vec(h, SVec{{i, Scalar(1)}}, h.mul_at(j, k));
          if (!svec_eq(lhs, rhs)) {
            r.pass = false;
            r.witness = tuple_witness(h, {i, j, k});
          }
        }
    rep.axioms.push_back(std::move(r));
  }

  // -- unitality: 1 ei == ei == ei 1
  {
    AxiomResult r{"unitality", true, ""};
    for (int i = 0; i < n && r.pass; ++i) {
      SVec ei{{i, Scalar(1)}};
      if (!svec_eq(mul_vec(h, h.unit, ei), ei) || !svec_eq(mul_vec(h, ei, h.unit), ei)) {
        r.pass = false;
        r.witness = tuple_witness(h, {i});
      }
    }
    rep.axioms.push_back(std::move(r));
  }

  // -- coassociativity: (Delta x id) Delta == (id x Delta) Delta
  {
    AxiomResult r{"coassociativity", true, ""};
    for (int i = 0; i < n && r.pass; ++i) {
      T3 lhs, rhs;
      for (const auto& t : h.comul[i]) {
        for (const auto& u : h.comul[t.j]) t3_accum(lhs, u.j, u.k, t.k, t.c * u.c);
        for (const auto& u : h.comul[t.k]) t3_accum(rhs, t.j, u.j, u.k, t.c * u.c);
      }
      if (lhs != rhs) {
        r.pass = false;
        r.witness = tuple_witness(h, {i});
      }
    }
    rep.axioms.push_back(std::move(r));
  }

  // -- counitality: (eps x id) Delta == id == (id x eps) Delta
  {
    AxiomResult r{"counitality", true, ""};
    for (int i = 0; i < n && r.pass; ++i) {
      SVec left, right;
      for (const auto& t : h.comul[i]) {
        svec_accum(left, t.k, t.c * h.counit[t.j]);
        svec_accum(right, t.j, t.c * h.counit[t.k]);
      }
      SVec ei{{i, Scalar(1)}};
      if (!svec_eq(left, ei) || !svec_eq(right, ei)) {
        r.pass = false;
        r.witness = tuple_witness(h, {i});
      }
    }
    rep.axioms.push_back(std::move(r));
  }

  // -- coproduct is multiplicative: Delta(ei ej) == Delta(ei) Delta(ej)
  {
    AxiomResult r{"comul-multiplicative", true, ""};
    for (int i = 0; i < n && r.pass; ++i)
      for (int j = 0; j < n && r.pass; ++j) {
        T2 lhs, rhs;
        for (const auto& [k, c] : h.mul_at(i, j))
          for (const auto& t : h.comul[k]) t2_accum(lhs, t.j, t.k, c * t.c);
        for (const auto& a : h.comul[i])
          for (const auto& b : h.comul[j]) {
            Scalar c = a.c * b.c;
            for (const auto& [p, cp] : h.mul_at(a.j, b.j))
              for (const auto& [q, cq] : h.mul_at(a.k, b.k))
                t2_accum(rhs, p, q, c * cp * cq);
          }
        if (lhs != rhs) {
          r.pass = false;
          r.witness = tuple_witness(h, {i, j});
        }
      }
    rep.axioms.push_back(std::move(r));
  }

  // -- coproduct of the unit: Delta(1) == 1 x 1
  {
    AxiomResult r{"comul-unit", true, ""};
    T2 lhs, rhs;
    for (const auto& [i, c] : h.unit)
      for (const auto& t : h.comul[i]) t2_accum(lhs, t.j, t.k, c * t.c);
    for (const auto& [i, ci] : h.unit)
      for (const auto& [j, cj] : h.unit) t2_accum(rhs, i, j, ci * cj);
    if (lhs != rhs) {
      r.pass = false;
      r.witness = "unit";
    }
    rep.axioms.push_back(std::move(r));
  }

  // -- counit is an algebra map: eps(ei ej) == eps(ei) eps(ej), eps(1) == 1
  {
    AxiomResult r{"counit-multiplicative", true, ""};
    for (int i = 0; i < n && r.pass; ++i)
      for (int j = 0; j < n && r.pass; ++j) {
        Scalar lhs = counit_vec(h, h.mul_at(i, j));
        if (!(lhs == h.counit[i] * h.counit[j])) {
          r.pass = false;
          r.witness = tuple_witness(h, {i, j});
        }
      }
    if (r.pass && !(counit_vec(h, h.unit) == Scalar::one(h.field))) {
      r.pass = false;
      r.witness = "unit";
    }
    rep.axioms.push_back(std::move(r));
  }

  // -- antipode: m (S x id) Delta == unit . eps == m (id x S) Delta
  if (h.has_antipode()) {
    AxiomResult r{"antipode", true, ""};
    for (int i = 0; i < n && r.pass; ++i) {
      SVec left, right;
      for (const auto& t : h.comul[i]) {
        SVec sj = antipode_vec(h, SVec{{t.j, Scalar(1)}});
        SVec sk = antipode_vec(h, SVec{{t.k, Scalar(1)}});
        left = svec_add(left, svec_scale(mul_vec(h, sj, SVec{{t.k, Scalar(1)}}), t.c));
        right = svec_add(right, svec_scale(mul_vec(h, SVec{{t.j, Scalar(1)}}, sk), t.c));
      }
      SVec target = svec_scale(h.unit, h.counit[i]);
      if (!svec_eq(left, target) || !svec_eq(right, target)) {
        r.pass = false;
        r.witness = tuple_witness(h, {i});
      }
    }
    rep.axioms.push_back(std::move(r));
  }

  return rep;
}

}  // namespace ibraid
