#include "ibraid/linalg.hpp"

#include <algorithm>

namespace ibraid {

void srow_axpy(SRow& y, const Scalar& a, const SRow& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      Scalar w = a * v;
      if (!w.is_zero()) y.emplace(i, std::move(w));
    } else {
      it->second = it->second + a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

SRow srow_scale(const SRow& x, const Scalar& a) {
  SRow r;
  if (a.is_zero()) return r;
  for (const auto& [i, v] : x) {
    Scalar w = a * v;
    if (!w.is_zero()) r.emplace(i, std::move(w));
  }
  return r;
}

bool srow_eq(const SRow& a, const SRow& b) {
  if (a.size() != b.size()) return false;
  auto it = b.begin();
  for (const auto& [i, v] : a) {
    if (it->first != i || !(it->second == v)) return false;
    ++it;
  }
  return true;
}

// ==== Echelon ===============================================================

void Echelon::reduce(SRow& v) const {
  // rows_ sorted by pivot; sweep once, each elimination only introduces
  // coordinates to the right of the pivot being cleared
  for (const auto& [p, row] : rows_) {
    auto it = v.find(p);
    if (it == v.end()) continue;
    Scalar f = -it->second;
    srow_axpy(v, f, row);
  }
}

bool Echelon::insert(SRow v) {
  reduce(v);
  if (v.empty()) return false;
  int p = v.begin()->first;
  if (p < 0 || p >= ncols_) fail(Err::Input, "echelon row out of range");
  const Scalar& lead = v.begin()->second;
  if (!lead.is_unit()) fail(Err::Input, "echelon elimination needs unit pivots");
  v = srow_scale(v, lead.inverse());
  // back-eliminate the new pivot from all existing rows
  for (auto& [q, row] : rows_) {
    auto it = row.find(p);
    if (it == row.end()) continue;
    Scalar f = -it->second;
    srow_axpy(row, f, v);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const auto& r, int key) { return r.first < key; });
  rows_.insert(pos, {p, std::move(v)});
  return true;
}

std::vector<int> Echelon::pivots() const {
  std::vector<int> ps;
  ps.reserve(rows_.size());
  for (const auto& [p, row] : rows_) ps.push_back(p);
  return ps;
}

std::vector<int> Echelon::free_cols() const {
  std::vector<int> fs;
  auto ps = pivots();
  size_t k = 0;
  for (int c = 0; c < ncols_; ++c) {
    if (k < ps.size() && ps[k] == c) {
      ++k;
    } else {
      fs.push_back(c);
    }
  }
  return fs;
}

// ==== SolutionSpace =========================================================

bool SolutionSpace::contains(SRow v) const {
  Echelon e(ambient);
  for (const auto& row : basis) e.insert(row);
  e.reduce(v);
  return v.empty();
}

SolutionSpace nullspace(int ncols, const std::vector<SRow>& constraint_rows) {
  Echelon e(ncols);
  for (const auto& r : constraint_rows) e.insert(r);
  // with full RREF the kernel basis reads off directly: one vector per free
  // column f, x[f] = 1 and x[pivot] = -row[f]
  SolutionSpace sol;
  sol.ambient = ncols;
  Echelon canon(ncols);
  for (int f : e.free_cols()) {
    SRow v;
    v.emplace(f, Scalar(1));
    for (const auto& [p, row] : e.rows()) {
      auto it = row.find(f);
      if (it != row.end()) v.emplace(p, -it->second);
    }
    canon.insert(std::move(v));
  }
  for (const auto& [p, row] : canon.rows()) sol.basis.push_back(row);
  return sol;
}

// ==== dense solve ===========================================================

std::vector<Scalar> solve_unit_pivot(std::vector<std::vector<Scalar>> a,
                                     std::vector<Scalar> b) {
  const int m = (int)a.size();
  if (m == 0) return {};
  const int n = (int)a[0].size();
  if ((int)b.size() != m) fail(Err::Input, "solve: rhs size mismatch");
  std::vector<int> pivot_row_of_col(n, -1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i) {
      if (a[i][c].is_unit()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) {
      // no unit pivot in this column; any nonzero leftover entry means we
      // cannot eliminate it over this ring
      for (int i = r; i < m; ++i)
        if (!a[i][c].is_zero())
          fail(Err::NotInvertible, "no unit pivot available in column " + std::to_string(c));
      continue;
    }
    std::swap(a[pr], a[r]);
    std::swap(b[pr], b[r]);
    Scalar inv = a[r][c].inverse();
    for (int j = c; j < n; ++j) a[r][j] = a[r][j] * inv;
    b[r] = b[r] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (int j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_row_of_col[c] = r;
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (!b[i].is_zero()) fail(Err::NotInvertible, "inconsistent linear system");
  std::vector<Scalar> x(n, Scalar(0));
  for (int c = 0; c < n; ++c)
    if (pivot_row_of_col[c] >= 0) x[c] = b[pivot_row_of_col[c]];
  return x;
}

// ==== LinearMap =============================================================

void LinearMap::add(int r, int c, const Scalar& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(r, c);
  auto it = a.find(key);
  if (it == a.end()) {
    a.emplace(key, v);
  } else {
    it->second = it->second + v;
    if (it->second.is_zero()) a.erase(it);
  }
}

std::vector<Scalar> LinearMap::apply(const std::vector<Scalar>& x) const {
  if ((int)x.size() != cols) fail(Err::Input, "linear map: dimension mismatch");
  std::vector<Scalar> y(rows, Scalar(0));
  for (const auto& [rc, v] : a) y[rc.first] = y[rc.first] + v * x[rc.second];
  return y;
}

SRow LinearMap::apply_sparse(const SRow& x) const {
  SRow y;
  for (const auto& [rc, v] : a) {
    auto it = x.find(rc.second);
    if (it == x.end()) continue;
    Scalar w = v * it->second;
    if (w.is_zero()) continue;
    auto jt = y.find(rc.first);
    if (jt == y.end()) {
      y.emplace(rc.first, std::move(w));
    } else {
      jt->second = jt->second + w;
      if (jt->second.is_zero()) y.erase(jt);
    }
  }
  return y;
}

int LinearMap::rank() const {
  // row rank; gather rows then echelonize
  std::map<int, SRow> by_row;
  for (const auto& [rc, v] : a) by_row[rc.first].emplace(rc.second, v);
  Echelon e(cols);
  for (auto& [r, row] : by_row) e.insert(std::move(row));
  return e.rank();
}

LinearMap lm_identity(int n) {
  LinearMap f;
  f.rows = f.cols = n;
  for (int i = 0; i < n; ++i) f.a.emplace(std::make_pair(i, i), Scalar(1));
  return f;
}

LinearMap lm_compose(const LinearMap& f, const LinearMap& g) {
  if (f.cols != g.rows) fail(Err::Input, "compose: dimension mismatch");
  LinearMap h;
  h.rows = f.rows;
  h.cols = g.cols;
  // group g by row for the middle index
  std::map<int, std::vector<std::pair<int, Scalar>>> g_by_row;
  for (const auto& [rc, v] : g.a) g_by_row[rc.first].push_back({rc.second, v});
  for (const auto& [rc, v] : f.a) {
    auto it = g_by_row.find(rc.second);
    if (it == g_by_row.end()) continue;
    for (const auto& [c2, w] : it->second) h.add(rc.first, c2, v * w);
  }
  return h;
}

bool lm_eq(const LinearMap& f, const LinearMap& g) {
  if (f.rows != g.rows || f.cols != g.cols || f.a.size() != g.a.size()) return false;
  auto it = g.a.begin();
  for (const auto& [rc, v] : f.a) {
    if (it->first != rc || !(it->second == v)) return false;
    ++it;
  }
  return true;
}

}  // namespace ibraid
