#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ibraid/linalg.hpp"
#include "ibraid/scalar.hpp"

namespace ibraid {

// sparse element of the underlying vector space, sorted by index, values nonzero
using SVec = std::vector<std::pair<int, Scalar>>;

SVec svec_from(const SRow& r);
SRow srow_from(const SVec& v);
void svec_accum(SVec& v, int i, const Scalar& c);  // keeps order + prunes zeros
SVec svec_add(const SVec& a, const SVec& b);
SVec svec_scale(const SVec& a, const Scalar& c);
bool svec_eq(const SVec& a, const SVec& b);

struct ComulTerm {
  int j, k;
  Scalar c;
};

// ==== finite-dimensional bialgebra by structure constants ===================
//
// mul[(i,j)] expands e_i * e_j in the basis; comul[i] expands the coproduct of
// e_i as sum of c * e_j (x) e_k; unit/counit are coefficient (co)vectors; the
// optional antipode matrix acts on coordinates: S(e_j) = sum_i S[i][j] e_i.
// Validation is on demand; partially built objects are allowed.

struct FinBialgebra {
  Field field;
  std::string name;
  std::vector<std::string> basis;
  std::vector<SVec> mul;                      // size n*n, entry i*n+j
  std::vector<std::vector<ComulTerm>> comul;  // size n
  SVec unit;
  std::vector<Scalar> counit;                 // size n
  std::optional<std::vector<std::vector<Scalar>>> antipode;

  int dim() const { return (int)basis.size(); }
  bool has_antipode() const { return antipode.has_value(); }
  const SVec& mul_at(int i, int j) const { return mul[(size_t)i * basis.size() + j]; }
};

// structural sanity: table sizes, index ranges, distinct labels, scalar kinds
void check_wellformed(const FinBialgebra& h);

// element-level helpers
SVec mul_vec(const FinBialgebra& h, const SVec& a, const SVec& b);
SVec antipode_vec(const FinBialgebra& h, const SVec& a);
Scalar counit_vec(const FinBialgebra& h, const SVec& a);

// coefficient-wise lift of every structure constant into `field` (see lift_to)
FinBialgebra lift_bialgebra(const FinBialgebra& h, const Field& field);

// ==== axiom reports =========================================================

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::string witness;  // first counterexample, empty when passing
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;

  bool all_pass() const;
  const AxiomResult* find(const std::string& name) const;
  std::string summary() const;
};

// checks the eight bialgebra identities (associativity, unitality,
// coassociativity, counitality, the three multiplicativity compatibilities of
// the coproduct/counit, and the antipode identity when a matrix is present),
// reporting the first failing basis tuple for each
AxiomReport validate_bialgebra(const FinBialgebra& h);

}  // namespace ibraid
