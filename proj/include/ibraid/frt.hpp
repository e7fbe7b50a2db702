#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ibraid/coquasitri.hpp"

namespace ibraid {

// ==== braided vector spaces =================================================
//
// Dense coefficient tensors on V (x) V, dim(V) = N, all indices 0-based:
// entry (i,j,k,l) sits at ((i*N + j)*N + k)*N + l and encodes
//   c(v_i (x) v_j) = sum_{k,l} c_{ij}^{kl} v_k (x) v_l,
// likewise for the optional infinitesimal part t.

struct BraidedVS {
  int N = 0;
  Field field;
  std::vector<Scalar> c;                 // size N^4
  std::vector<Scalar> c_inv;             // cached inverse, same layout
  std::optional<std::vector<Scalar>> t;  // optional, size N^4

  bool has_t() const { return t.has_value(); }
  const Scalar& cc(int i, int j, int k, int l) const {
    return c[(size_t)((i * N + j) * N + k) * N + l];
  }
  const Scalar& ci(int i, int j, int k, int l) const {
    return c_inv[(size_t)((i * N + j) * N + k) * N + l];
  }
  const Scalar& tt(int i, int j, int k, int l) const {
    return (*t)[(size_t)((i * N + j) * N + k) * N + l];
  }
};

// size/kind checks plus the cached inverse (throws NotInvertible)
BraidedVS make_braided_vs(int n, const Field& field, std::vector<Scalar> c,
                          std::optional<std::vector<Scalar>> t = std::nullopt);

// c12 c23 c12 = c23 c12 c23 on V^{(x)3}; each verdict is cross-checked against
// the equivalent statement for the flipped tensor (swap composed with c turns
// the braid equation into the quantum Yang-Baxter equation and back)
bool check_braid(const BraidedVS& b);
bool check_qyb_matrix(const BraidedVS& b);  // c12 c13 c23 = c23 c13 c12

// infinitesimal braiding axioms for (c, t); requires t and a braided c
// (throws Input otherwise). Rows:
//   slide-1         c12 c23 t12 = t23 c12 c23
//   slide-2         t12 c23 c12 = c23 c12 t23
//   conjugation     c23 t12 c23^{-1} = c12 t23 c12^{-1}
//   four-conjugates c23 t12 c23^{-1} = c12^{-1} t23 c12
//                     = c23^{-1} t12 c23 = c12 t23 c12^{-1}
//   pure-braid      [t23, c12 t23 c12^{-1}] = [t12, t23] = [c23 t12 c23^{-1}, t12]
AxiomReport check_ibv(const BraidedVS& b);

// assemble c(v_i (x) v_j) = q[i][j] v_j (x) v_i, optional dense t
BraidedVS diagonal_braiding(const Field& field,
                            const std::vector<std::vector<Scalar>>& q,
                            std::optional<std::vector<Scalar>> t = std::nullopt);

// scalar form of the infinitesimal braiding axioms for a diagonal braiding;
// q entries must be nonzero (throws Input). Agrees with check_ibv on the
// tensors assembled by diagonal_braiding.
bool check_diagonal_ibv(const Field& field,
                        const std::vector<std::vector<Scalar>>& q,
                        const std::vector<Scalar>& t);

// ==== the graded quotient bialgebra =========================================
//
// Words over the N^2 generators T_i^j represent monomials of the free
// algebra; letter (i,j) is T_i^j. The degree-d component of the quotient is
// the complement of the span J_d of all  u * rel * v  with u, v words,
// |u| + |rel| + |v| = d, and rel one of the degree-2 relation combos below.

using FRTWord = std::vector<std::pair<int, int>>;
using WordCombo = std::map<FRTWord, Scalar>;

std::string frt_word_str(const FRTWord& w);        // "T11.T22", 1-based digits
int frt_flat_index(const FRTWord& w, int n);       // degree-lex position
FRTWord frt_word_from_index(long long idx, int d, int n);

// sum_{m,n} c_{ij}^{mn} T_m^k T_n^l  -  T_i^m T_j^n c_{mn}^{kl}, and the same
// with the infinitesimal tensor in place of c
WordCombo frt_relation_c(const BraidedVS& b, int i, int j, int k, int l);
WordCombo frt_relation_t(const BraidedVS& b, int i, int j, int k, int l);

struct GradedFRT {
  int degree = 0;
  int ambient = 0;                 // (N^2)^degree
  Echelon ideal{0};                // row space of J_d on flattened words
  std::vector<int> quotient_basis; // non-pivot word indices, ascending
  int dim = 0;                     // ambient - ideal.rank()
};

// degree-d component; (N^2)^d above the cap trips ResourceCap
GradedFRT frt_component(const BraidedVS& b, int d, long long cap = 4096);

// ==== recursive evaluation on monomials =====================================
//
// The bicharacter extends R(T_i^k (x) T_j^l) = c_{ji}^{kl} to all word pairs
// through the two hexagon laws, peeling the last letter of the right word
// and then the first letter of the left word; its convolution inverse starts
// from cbar_{ij}^{lk} with the mirrored peeling. The infinitesimal form
// starts from t_{ij}^{kl} and extends through the one-letter expansion
//   chi(a (x) b^1...b^n) = chi(a (x) b^1) eps(b^2...b^n)
//                          + sum_i chi(a <| (b^1...b^{i-1}) (x) b^i) eps(rest)
// on the left-degree-1 slice and
//   chi(g_1...g_m (x) c) = sum_p eps(g_1...g_{p-1})
//                                chi_1n(g_p (x) (g_{p+1}...g_m) |> c)
// in general, with the triangle actions
//   a <| b = R^{-1}(a_1 (x) b_1) a_2 R(a_3 (x) b_2)
//   b |> a = R^{-1}(b_1 (x) a_1) a_2 R(b_2 (x) a_3)
// computed on words. Values are memoized per evaluator; the evaluator does
// not re-validate the infinitesimal axioms (the free functions below do).

class FRTEvaluator {
 public:
  explicit FRTEvaluator(const BraidedVS& b);

  Scalar r(const FRTWord& a, const FRTWord& b);
  Scalar r_inv(const FRTWord& a, const FRTWord& b);
  Scalar chi(const FRTWord& a, const FRTWord& b);  // requires t

  WordCombo act_right(const FRTWord& a, const FRTWord& b);  // a <| b
  WordCombo act_left(const FRTWord& b, const FRTWord& a);   // b |> a

  Scalar counit(const FRTWord& w) const;  // product of deltas
  const BraidedVS& source() const { return *b_; }

 private:
  Scalar chi_1n(const std::pair<int, int>& g, const FRTWord& b);

  const BraidedVS* b_;
  Scalar zero_, one_;
  std::map<std::pair<FRTWord, FRTWord>, Scalar> r_memo_, rinv_memo_, chi_memo_;
  std::map<std::pair<FRTWord, FRTWord>, WordCombo> actr_memo_, actl_memo_;
};

// one-shot wrappers; word letters are range-checked. eval_chi additionally
// insists on a full infinitesimally braided structure (throws Input when the
// axioms fail), so broken inputs are probed through check_descent instead.
Scalar eval_R(const BraidedVS& b, const FRTWord& w1, const FRTWord& w2);
Scalar eval_R_inv(const BraidedVS& b, const FRTWord& w1, const FRTWord& w2);
Scalar eval_chi(const BraidedVS& b, const FRTWord& w1, const FRTWord& w2);

// closed form  lambda |w1| |w2| eps(w1 w2)  for t = lambda Id (throws Input
// otherwise); cross-checked against the recursive evaluation before returning
Scalar canonical_chi(const BraidedVS& b, const FRTWord& w1, const FRTWord& w2);

// well-definedness on the quotient, degrees 2..max_degree. Rows:
//   bichar-on-ideal   R and R^{-1} vanish against every embedded relation,
//                     both argument orders, partner words up to max_degree
//   chi-on-ideal      same for the infinitesimal form (skipped without t)
//   commutation-mod-ideal
//                     chi(a_1 (x) b_1) a_2 b_2 - a_1 b_1 chi(a_2 (x) b_2)
//                     lies in the relation span, all word pairs with
//                     |a| + |b| <= max_degree
// witnesses name the first nonvanishing pairing
AxiomReport check_descent(const BraidedVS& b, int max_degree);

// ==== quantum special linear no-go ==========================================
//
// Constraint system on the 16 generator-pair values chi(T_i^j (x) T_k^l) of
// a would-be infinitesimal form on the 2x2 quantum special linear algebra at
// parameter q: the commutation law on generator pairs, reduced inside the
// span of the quadratic relations and the inhomogeneous determinant relation,
// plus the determinant rows  chi(a (x) alpha delta) = q^{-1} chi(a (x) beta
// gamma)  expanded through the hexagon law. All bicharacter values enter in
// inverse pairs, so the q^{1/2} normalization of the braiding drops out and
// plain rational q works. Unknown order: value on T_i^j (x) T_k^l at
// (i*2+j)*4 + (k*2+l).
SolutionSpace slq2_chi_obstruction(const Scalar& q);

// ==== induced structure on comodules ========================================

// left coaction  delta(v_a) = sum c * e_h (x) v_v  on a vdim-dimensional
// space over the bialgebra of the enclosing structure
struct CoactionTerm {
  int h, v;
  Scalar c;
};
struct CoactionData {
  int vdim = 0;
  std::vector<std::vector<CoactionTerm>> delta;  // size vdim
};

// braiding and infinitesimal part induced on a comodule:
//   c(v (x) v') = R(v'_{-1} (x) v_{-1}) v'_0 (x) v_0
//   t(v (x) v') = chi(v_{-1} (x) v'_{-1}) v_0 (x) v'_0
// validates the coaction axioms and the resulting infinitesimal braiding
BraidedVS ibv_from_precartier(const InfRForm& inf, const CoactionData& co);

// ==== stock example =========================================================

// Kassel 2x2 braiding over Q(s), q = s^2:
//   c(v1 (x) v1) = s v1 v1, c(v2 (x) v2) = s v2 v2, c(v1 (x) v2) = s^{-1} v2 v1,
//   c(v2 (x) v1) = s^{-1} v1 v2 + s^{-1}(s^2 - s^{-2}) v2 v1
// with t = lambda Id (lambda rational, lifted)
BraidedVS mq2_braided_vs(const Scalar& lambda);

}  // namespace ibraid
