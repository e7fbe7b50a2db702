#pragma once

#include <map>
#include <string>
#include <vector>

#include "ibraid/bialgebra.hpp"

namespace ibraid {

// ==== elements of tensor powers =============================================
//
// Sparse element of H^{(x) k}; keys are index tuples of length `order`,
// stored values nonzero. Order 0 is the scalar line (single empty key).
// `n` snapshots the parent dimension so mismatched use trips early.

struct TensorElement {
  int n = 0;
  int order = 0;
  std::map<std::vector<int>, Scalar> c;

  bool is_zero() const { return c.empty(); }
};

TensorElement te_zero(const FinBialgebra& h, int order);
TensorElement te_unit(const FinBialgebra& h, int order);  // 1^{(x) k}
TensorElement te_basis(const FinBialgebra& h, std::vector<int> tuple);
TensorElement te_from_matrix(const FinBialgebra& h,
                             const std::vector<std::vector<Scalar>>& m);  // order 2

void te_accum(TensorElement& t, const std::vector<int>& key, const Scalar& c);
TensorElement te_add(const TensorElement& a, const TensorElement& b);
TensorElement te_sub(const TensorElement& a, const TensorElement& b);
TensorElement te_neg(const TensorElement& a);
TensorElement te_scale(const TensorElement& a, const Scalar& c);
bool te_eq(const TensorElement& a, const TensorElement& b);
Scalar te_coeff(const TensorElement& a, const std::vector<int>& key);

// componentwise product in the algebra H^{(x) k}
TensorElement tensor_mul(const FinBialgebra& h, const TensorElement& a,
                         const TensorElement& b);

// place an order-m element into the listed legs (1-based, strictly increasing)
// of H^{(x) k}, filling every other leg with the unit
TensorElement leg_embed(const FinBialgebra& h, const TensorElement& a, int k,
                        const std::vector<int>& legs);

// permute legs: result key r satisfies r[t] = key[perm[t]]
TensorElement leg_permute(const TensorElement& a, const std::vector<int>& perm);
TensorElement flip_op(const TensorElement& a);  // order 2 swap

TensorElement apply_coproduct_leg(const FinBialgebra& h, const TensorElement& a, int leg);
TensorElement apply_counit_leg(const FinBialgebra& h, const TensorElement& a, int leg);
TensorElement apply_antipode_leg(const FinBialgebra& h, const TensorElement& a, int leg);

// multiply adjacent legs (p, p+1) into one; order k -> k-1
TensorElement apply_mul_legs(const FinBialgebra& h, const TensorElement& a, int leg);

// apply a coordinate matrix (codomain dim rows) to every leg; used for images
// of tensors under bialgebra maps
TensorElement te_map_legs(const TensorElement& a,
                          const std::vector<std::vector<Scalar>>& f, int out_dim);

// multiplicative inverse in H^{(x) k} by exact linear solve; verifies the
// two-sided identity and throws NotInvertible otherwise
TensorElement invert_in_tensor_algebra(const FinBialgebra& h, const TensorElement& a);

// Delta^m(e_i) as an element of H^{(x) (m+1)}
TensorElement te_delta_power(const FinBialgebra& h, int i, int m);

// coefficient-wise rational lift / truncated-polynomial order slice
TensorElement te_lift(const TensorElement& a, const Field& f);
TensorElement te_jet_slice(const TensorElement& a, int k);

std::string te_str(const FinBialgebra& h, const TensorElement& a);

// ==== linear forms on tensor powers =========================================

struct MultiForm {
  int n = 0;
  int order = 1;
  std::map<std::vector<int>, Scalar> c;  // value on each basis tuple

  bool is_zero() const { return c.empty(); }
};

MultiForm mf_zero(const FinBialgebra& h, int order);
MultiForm mf_counit(const FinBialgebra& h, int order);  // eps^{(x) k}
MultiForm mf_from_matrix(const FinBialgebra& h,
                         const std::vector<std::vector<Scalar>>& m);  // order 2

void mf_accum(MultiForm& f, const std::vector<int>& key, const Scalar& c);
MultiForm mf_add(const MultiForm& a, const MultiForm& b);
MultiForm mf_sub(const MultiForm& a, const MultiForm& b);
MultiForm mf_neg(const MultiForm& a);
MultiForm mf_scale(const MultiForm& a, const Scalar& c);
bool mf_eq(const MultiForm& a, const MultiForm& b);

Scalar mf_value(const MultiForm& f, const std::vector<int>& tuple);
Scalar mf_value2(const MultiForm& f, int i, int j);
Scalar mf_pair(const MultiForm& f, const TensorElement& a);
Scalar mf_value_on(const FinBialgebra& h, const MultiForm& f,
                   const std::vector<SVec>& args);  // multilinear extension

// convolution product: (f * g)(tuple) = f(tuple_(1)) g(tuple_(2)) with the
// coproduct applied leg by leg
MultiForm convolution_mul(const FinBialgebra& h, const MultiForm& f, const MultiForm& g);

// two-sided convolution inverse by exact linear solve; throws NotConvInvertible
MultiForm convolution_invert(const FinBialgebra& h, const MultiForm& f);

MultiForm mf_embed(const FinBialgebra& h, const MultiForm& f, int k,
                   const std::vector<int>& legs);  // eps on the other legs
MultiForm mf_flip(const MultiForm& f);             // precompose the swap, order 2
MultiForm mf_precompose_antipode(const FinBialgebra& h, const MultiForm& f, int leg);

// precompose multiplication merging legs `leg`, `leg`+1 of the result:
// g(a_1,...,a_{k+1}) = f(a_1,..., a_leg a_{leg+1}, ..., a_{k+1})
MultiForm mf_precompose_mul(const FinBialgebra& h, const MultiForm& f, int leg);

std::string mf_str(const FinBialgebra& h, const MultiForm& f);

}  // namespace ibraid
