#pragma once

#include "ibraid/quasitri.hpp"

namespace ibraid {

// ==== tensor products =======================================================

struct TensorProductResult {
  FinBialgebra H;           // H (x) H', basis row-major (i*n' + j), labels "a.b"
  QTStructure qt;           // R~[(i,m),(j,n)] = R[i,j] R'[m,n]
  TensorElement chi_left;   // chi^i (x) 1' (x) chi_i (x) 1'
  TensorElement chi_right;  // 1 (x) chi'^m (x) 1 (x) chi'_m
};

// both inputs quasitriangular with a chosen chi each (zero = none); any linear
// combination of the two returned chi summands is again infinitesimal.
// throws ResourceCap when dim exceeds `cap`
TensorProductResult tensor_product_precartier(const InfRMatrix& a,
                                              const InfRMatrix& b, int cap = 64);

// ==== pushforward along a surjective bialgebra map ==========================

// f is the dense coordinate matrix of H -> dst (dst.dim() rows, H.dim() cols).
// verifies that f is a bialgebra map (NotBialgebraMap with the first failing
// pair) and surjective (NotSurjective), then transports R and chi and
// re-verifies every axiom on the image
InfRMatrix pushforward(const FinBialgebra& dst,
                       const std::vector<std::vector<Scalar>>& f,
                       const InfRMatrix& src);

// ==== Lie-algebra-level checks ==============================================

struct LieAlgebraData {
  Field field;
  std::vector<std::string> basis;
  std::vector<SVec> bracket;  // [e_i, e_j] at i*dim + j

  int dim() const { return (int)basis.size(); }
  const SVec& bracket_at(int i, int j) const {
    return bracket[(size_t)i * basis.size() + j];
  }
};

// antisymmetry + Jacobi on all basis triples; throws Input with a witness
void check_lie(const LieAlgebraData& g);

struct LieCheckReport {
  bool cybe = false;           // [r12,r13] + [r12,r23] + [r13,r23] = 0
  bool symmetrization_invariant = false;  // (ad_x (x) Id + Id (x) ad_x)(r + r^op) = 0
  bool skew = false;           // r^op = -r
};

// r is an order-2 coefficient tensor over the Lie algebra basis
LieCheckReport lie_check(const LieAlgebraData& g, const TensorElement& r);

// ==== built-in examples =====================================================

FinBialgebra sweedler_bialgebra();             // basis 1, g, x, xg
TensorElement sweedler_R(const Scalar& lambda);
TensorElement sweedler_chi(const Scalar& alpha);  // alpha xg (x) x
TensorElement sweedler_twist(const Scalar& t);    // 1 (x) 1 + (t/2) xg (x) x
FinBialgebra group_algebra_z2();
TensorElement group_algebra_z2_R();
FinBialgebra trivial_bialgebra();
LieAlgebraData sl2_lie();
TensorElement sl2_r();                            // e (x) f + 1/4 h (x) h

struct BuiltinObject {
  std::string kind;  // "bialgebra" | "element" | "lie"
  std::optional<FinBialgebra> H;       // context bialgebra for elements
  std::optional<TensorElement> elem;
  std::optional<LieAlgebraData> lie;
};

// names: sweedler, sweedler_R, sweedler_chi, sweedler_twist, group_algebra_Z2,
// group_algebra_Z2_R, trivial, sl2_r; `param` feeds lambda/alpha/t.
// throws UnknownBuiltin otherwise
BuiltinObject builtin(const std::string& name, const Scalar& param = Scalar(0));

}  // namespace ibraid
