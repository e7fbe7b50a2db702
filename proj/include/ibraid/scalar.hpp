#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "ibraid/error.hpp"

namespace ibraid {

// ==== coefficient fields ====================================================
//
// Three exact coefficient domains:
//   * plain rationals Q
//   * rational functions Q(var), stored reduced with monic denominator
//   * truncated polynomial rings Q[var]/(var^N), N >= 1
// Everything is canonical: equal values have equal representations.

enum class FieldKind { Rational, RationalFunction, TruncatedPoly };

struct Field {
  FieldKind kind = FieldKind::Rational;
  std::string var;  // variable name; empty for plain rationals
  int trunc = 0;    // truncation order N; only for TruncatedPoly

  bool operator==(const Field&) const = default;
};

Field field_rationals();
Field field_rational_functions(const std::string& var = "s");
Field field_truncated(int order, const std::string& var = "h");
std::string field_str(const Field& f);

// ==== dense polynomials over Q ==============================================
// ascending coefficients, invariant: no trailing zero (zero poly = empty)

struct Poly {
  std::vector<mpq_class> c;

  bool is_zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }
  void trim();
};

Poly poly_const(const mpq_class& q);
Poly poly_var();
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const mpq_class& q);
void poly_divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly poly_gcd(Poly a, Poly b);  // monic gcd, zero if both zero
mpq_class poly_eval(const Poly& p, const mpq_class& x);
bool poly_eq(const Poly& a, const Poly& b);

// reduced fraction of polynomials; den monic, nonzero, coprime to num
struct RatFun {
  Poly num, den;
};

// element of Q[var]/(var^N); c.size() == N always
struct Jet {
  std::vector<mpq_class> c;
};

// ==== scalars ===============================================================

class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(long n) : v_(mpq_class(n)) {}
  explicit Scalar(mpq_class q) { q.canonicalize(); v_ = std::move(q); }

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar variable(const Field& f);  // the generator: var or class of var
  static Scalar from_rat(const mpq_class& q, const Field& f);
  static Scalar make_ratfun(Poly num, Poly den);        // reduces
  static Scalar make_jet(std::vector<mpq_class> coef);  // trunc = coef.size()

  FieldKind kind() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;  // invertible in its ring

  const mpq_class& rat() const;  // requires Rational kind
  const RatFun& rf() const;      // requires RationalFunction kind
  const Jet& jet() const;        // requires TruncatedPoly kind
  int jet_trunc() const;
  const mpq_class& jet_coeff(int k) const;

  Scalar inverse() const;  // throws NotInvertible
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  std::variant<mpq_class, RatFun, Jet> v_;
};

Scalar pow_scalar(const Scalar& a, long e);

// substitute a rational point into a RationalFunction (or Rational) scalar;
// throws Input if the denominator vanishes there. Used for spot-check oracles.
mpq_class rf_at(const Scalar& s, const mpq_class& point);

// lift a Rational scalar into another field as a constant
Scalar lift_to(const Scalar& s, const Field& f);

// ==== exact rendering / parsing =============================================
//
// Grammar: expr  := ['-'] term { ('+'|'-') term }
//          term  := power { ('*'|'/') power }
//          power := atom [ '^' ['-'] INT ]
//          atom  := INT | VAR | '(' expr ')'
// Renderer emits strings the parser maps back to the identical scalar.

std::string scalar_str(const Scalar& s, const Field& f);
Scalar parse_scalar(const std::string& text, const Field& f);

}  // namespace ibraid
