#pragma once

#include <map>
#include <vector>

#include "ibraid/scalar.hpp"

namespace ibraid {

// sparse coordinate vector; stored values are nonzero
using SRow = std::map<int, Scalar>;

void srow_axpy(SRow& y, const Scalar& a, const SRow& x);  // y += a*x
SRow srow_scale(const SRow& x, const Scalar& a);
bool srow_eq(const SRow& a, const SRow& b);

// ==== incremental reduced row echelon over a field ==========================
//
// Rows are kept mutually reduced with pivot coefficient 1 and strictly
// increasing pivot columns, so the stored rows are the canonical RREF of
// everything inserted so far.

class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}

  bool insert(SRow v);          // true if the rank grew
  void reduce(SRow& v) const;   // eliminate all pivot coordinates from v
  int rank() const { return (int)rows_.size(); }
  int ncols() const { return ncols_; }
  const std::vector<std::pair<int, SRow>>& rows() const { return rows_; }
  std::vector<int> pivots() const;
  std::vector<int> free_cols() const;

 private:
  int ncols_;
  std::vector<std::pair<int, SRow>> rows_;  // (pivot, row), pivot ascending
};

// ==== solution spaces =======================================================

struct SolutionSpace {
  int ambient = 0;
  std::vector<SRow> basis;  // canonical reduced echelon, leading coefficient 1

  int dim() const { return (int)basis.size(); }
  bool contains(SRow v) const;
};

// common kernel of the given constraint rows on an ambient coordinate space
SolutionSpace nullspace(int ncols, const std::vector<SRow>& constraint_rows);

// ==== dense exact solve =====================================================
//
// Gauss-Jordan with unit-pivot selection so it also works over truncated
// polynomial rings (a pivot must be invertible, not merely nonzero).
// Throws NotInvertible when no solution exists or the system is singular.

std::vector<Scalar> solve_unit_pivot(std::vector<std::vector<Scalar>> a,
                                     std::vector<Scalar> b);

// ==== sparse linear maps ====================================================

struct LinearMap {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, Scalar> a;  // (row, col) -> nonzero value

  void add(int r, int c, const Scalar& v);
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  SRow apply_sparse(const SRow& x) const;
  int rank() const;
};

LinearMap lm_identity(int n);
LinearMap lm_compose(const LinearMap& f, const LinearMap& g);  // f after g
bool lm_eq(const LinearMap& f, const LinearMap& g);

}  // namespace ibraid
