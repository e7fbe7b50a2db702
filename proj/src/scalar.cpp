#include "ibraid/scalar.hpp"

#include <cctype>
#include <sstream>

namespace ibraid {

// ==== fields ================================================================

Field field_rationals() { return Field{FieldKind::Rational, "", 0}; }

Field field_rational_functions(const std::string& var) {
  return Field{FieldKind::RationalFunction, var, 0};
}

Field field_truncated(int order, const std::string& var) {
  if (order < 1) fail(Err::Input, "truncation order must be >= 1");
  return Field{FieldKind::TruncatedPoly, var, order};
}

std::string field_str(const Field& f) {
  switch (f.kind) {
    case FieldKind::Rational: return "Q";
    case FieldKind::RationalFunction: return "Q(" + f.var + ")";
    case FieldKind::TruncatedPoly:
      return "Q[" + f.var + "]/(" + f.var + "^" + std::to_string(f.trunc) + ")";
  }
  return "?";
}

// ==== polynomials ===========================================================

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly poly_const(const mpq_class& q) {
  Poly p;
  if (q != 0) p.c.push_back(q);
  return p;
}

Poly poly_var() {
  Poly p;
  p.c = {mpq_class(0), mpq_class(1)};
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), mpq_class(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), mpq_class(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

Poly poly_scale(const Poly& a, const mpq_class& q) {
  if (q == 0) return Poly{};
  Poly r = a;
  for (auto& x : r.c) x *= q;
  return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.is_zero()) fail(Err::NotInvertible, "polynomial division by zero");
  rem = a;
  quo = Poly{};
  if (a.deg() >= b.deg()) quo.c.assign(a.deg() - b.deg() + 1, mpq_class(0));
  const mpq_class& lead = b.c.back();
  while (!rem.is_zero() && rem.deg() >= b.deg()) {
    int shift = rem.deg() - b.deg();
    mpq_class f = rem.c.back() / lead;
    quo.c[shift] += f;
    for (size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= f * b.c[i];
    rem.trim();
  }
  quo.trim();
}

static Poly poly_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return poly_scale(p, mpq_class(1) / p.c.back());
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

mpq_class poly_eval(const Poly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
  return acc;
}

bool poly_eq(const Poly& a, const Poly& b) { return a.c == b.c; }

// ==== scalar internals ======================================================

static RatFun rf_reduce(Poly num, Poly den) {
  if (den.is_zero()) fail(Err::NotInvertible, "rational function with zero denominator");
  if (num.is_zero()) return RatFun{Poly{}, poly_const(1)};
  Poly g = poly_gcd(num, den);
  Poly q, r;
  poly_divmod(num, g, q, r);
  num = q;
  poly_divmod(den, g, q, r);
  den = q;
  mpq_class lc = den.c.back();
  num = poly_scale(num, mpq_class(1) / lc);
  den = poly_scale(den, mpq_class(1) / lc);
  return RatFun{std::move(num), std::move(den)};
}

Scalar Scalar::zero(const Field& f) { return from_rat(mpq_class(0), f); }
Scalar Scalar::one(const Field& f) { return from_rat(mpq_class(1), f); }

Scalar Scalar::variable(const Field& f) {
  switch (f.kind) {
    case FieldKind::Rational:
      fail(Err::Input, "plain rationals have no variable");
    case FieldKind::RationalFunction:
      return make_ratfun(poly_var(), poly_const(1));
    case FieldKind::TruncatedPoly: {
      std::vector<mpq_class> c(f.trunc, mpq_class(0));
      if (f.trunc >= 2) c[1] = 1;  // at N=1 the class of var is 0
      return make_jet(std::move(c));
    }
  }
  fail(Err::Input, "bad field kind");
}

Scalar Scalar::from_rat(const mpq_class& q, const Field& f) {
  switch (f.kind) {
    case FieldKind::Rational: return Scalar(q);
    case FieldKind::RationalFunction: return make_ratfun(poly_const(q), poly_const(1));
    case FieldKind::TruncatedPoly: {
      std::vector<mpq_class> c(f.trunc, mpq_class(0));
      c[0] = q;
      return make_jet(std::move(c));
    }
  }
  fail(Err::Input, "bad field kind");
}

Scalar Scalar::make_ratfun(Poly num, Poly den) {
  for (mpq_class& q : num.c) q.canonicalize();
  for (mpq_class& q : den.c) q.canonicalize();
  Scalar s;
  s.v_ = rf_reduce(std::move(num), std::move(den));
  return s;
}

Scalar Scalar::make_jet(std::vector<mpq_class> coef) {
  if (coef.empty()) fail(Err::Input, "jet needs truncation >= 1");
  for (mpq_class& q : coef) q.canonicalize();
  Scalar s;
  s.v_ = Jet{std::move(coef)};
  return s;
}

FieldKind Scalar::kind() const {
  switch (v_.index()) {
    case 0: return FieldKind::Rational;
    case 1: return FieldKind::RationalFunction;
    default: return FieldKind::TruncatedPoly;
  }
}

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) == 0;
    case 1: return std::get<1>(v_).num.is_zero();
    default: {
      for (const auto& x : std::get<2>(v_).c)
        if (x != 0) return false;
      return true;
    }
  }
}

bool Scalar::is_one() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) == 1;
    case 1: {
      const RatFun& r = std::get<1>(v_);
      return r.den.deg() == 0 && r.num.deg() == 0 && r.num.c[0] == 1;
    }
    default: {
      const Jet& j = std::get<2>(v_);
      if (j.c[0] != 1) return false;
      for (size_t i = 1; i < j.c.size(); ++i)
        if (j.c[i] != 0) return false;
      return true;
    }
  }
}

bool Scalar::is_unit() const {
  if (kind() == FieldKind::TruncatedPoly) return std::get<2>(v_).c[0] != 0;
  return !is_zero();
}

const mpq_class& Scalar::rat() const {
  if (v_.index() != 0) fail(Err::Input, "scalar is not a plain rational");
  return std::get<0>(v_);
}

const RatFun& Scalar::rf() const {
  if (v_.index() != 1) fail(Err::Input, "scalar is not a rational function");
  return std::get<1>(v_);
}

const Jet& Scalar::jet() const {
  if (v_.index() != 2) fail(Err::Input, "scalar is not a truncated polynomial");
  return std::get<2>(v_);
}

int Scalar::jet_trunc() const { return (int)jet().c.size(); }

const mpq_class& Scalar::jet_coeff(int k) const {
  const Jet& j = jet();
  if (k < 0 || k >= (int)j.c.size()) fail(Err::Input, "jet coefficient out of range");
  return j.c[k];
}

// promote mixed-kind operands; Rational embeds anywhere, others must match
static void promote(Scalar& a, Scalar& b) {
  if (a.kind() == b.kind()) {
    if (a.kind() == FieldKind::TruncatedPoly && a.jet_trunc() != b.jet_trunc())
      fail(Err::Input, "jet truncation mismatch");
    return;
  }
  if (a.kind() == FieldKind::Rational) {
    Field f = b.kind() == FieldKind::RationalFunction
                  ? field_rational_functions("?")
                  : field_truncated(b.jet_trunc(), "?");
    a = Scalar::from_rat(a.rat(), f);
    return;
  }
  if (b.kind() == FieldKind::Rational) {
    promote(b, a);
    return;
  }
  fail(Err::Input, "incompatible scalar kinds");
}

Scalar operator+(const Scalar& a0, const Scalar& b0) {
  Scalar a = a0, b = b0;
  promote(a, b);
  switch (a.kind()) {
    case FieldKind::Rational: return Scalar(mpq_class(a.rat() + b.rat()));
    case FieldKind::RationalFunction: {
      const RatFun &x = a.rf(), &y = b.rf();
      return Scalar::make_ratfun(
          poly_add(poly_mul(x.num, y.den), poly_mul(y.num, x.den)),
          poly_mul(x.den, y.den));
    }
    default: {
      std::vector<mpq_class> c = a.jet().c;
      for (size_t i = 0; i < c.size(); ++i) c[i] += b.jet().c[i];
      return Scalar::make_jet(std::move(c));
    }
  }
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0: return Scalar(mpq_class(-std::get<0>(v_)));
    case 1: {
      const RatFun& r = std::get<1>(v_);
      return make_ratfun(poly_scale(r.num, -1), r.den);
    }
    default: {
      std::vector<mpq_class> c = std::get<2>(v_).c;
      for (auto& x : c) x = -x;
      return make_jet(std::move(c));
    }
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a0, const Scalar& b0) {
  Scalar a = a0, b = b0;
  promote(a, b);
  switch (a.kind()) {
    case FieldKind::Rational: return Scalar(mpq_class(a.rat() * b.rat()));
    case FieldKind::RationalFunction: {
      const RatFun &x = a.rf(), &y = b.rf();
      return Scalar::make_ratfun(poly_mul(x.num, y.num), poly_mul(x.den, y.den));
    }
    default: {
      const auto &x = a.jet().c, &y = b.jet().c;
      std::vector<mpq_class> c(x.size(), mpq_class(0));
      for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; i + j < c.size(); ++j) c[i + j] += x[i] * y[j];
      }
      return Scalar::make_jet(std::move(c));
    }
  }
}

Scalar Scalar::inverse() const {
  switch (v_.index()) {
    case 0: {
      const mpq_class& q = std::get<0>(v_);
      if (q == 0) fail(Err::NotInvertible, "division by zero");
      return Scalar(mpq_class(1 / q));
    }
    case 1: {
      const RatFun& r = std::get<1>(v_);
      if (r.num.is_zero()) fail(Err::NotInvertible, "division by zero rational function");
      return make_ratfun(r.den, r.num);
    }
    default: {
      const auto& a = std::get<2>(v_).c;
      if (a[0] == 0)
        fail(Err::NotInvertible, "truncated polynomial with zero constant term");
      std::vector<mpq_class> b(a.size(), mpq_class(0));
      b[0] = 1 / a[0];
      for (size_t k = 1; k < a.size(); ++k) {
        mpq_class acc = 0;
        for (size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
        b[k] = -acc / a[0];
      }
      return make_jet(std::move(b));
    }
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  Scalar a = *this, b = o;
  if (a.kind() != b.kind()) {
    if (a.kind() != FieldKind::Rational && b.kind() != FieldKind::Rational) return false;
    promote(a, b);
  }
  switch (a.kind()) {
    case FieldKind::Rational: return a.rat() == b.rat();
    case FieldKind::RationalFunction:
      return poly_eq(a.rf().num, b.rf().num) && poly_eq(a.rf().den, b.rf().den);
    default: return a.jet().c == b.jet().c;
  }
}

Scalar pow_scalar(const Scalar& a, long e) {
  if (e < 0) return pow_scalar(a.inverse(), -e);
  Scalar acc = 1, base = a;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

mpq_class rf_at(const Scalar& s, const mpq_class& point) {
  if (s.kind() == FieldKind::Rational) return s.rat();
  if (s.kind() != FieldKind::RationalFunction)
    fail(Err::Input, "substitution needs a rational function");
  mpq_class den = poly_eval(s.rf().den, point);
  if (den == 0) fail(Err::Input, "substitution point hits a pole");
  return poly_eval(s.rf().num, point) / den;
}

Scalar lift_to(const Scalar& s, const Field& f) {
  if (s.kind() == FieldKind::Rational) return Scalar::from_rat(s.rat(), f);
  fail(Err::Input, "can only lift plain rationals");
}

// ==== rendering =============================================================

static std::string q_str(const mpq_class& q) { return q.get_str(); }

static std::string q_abs_str(const mpq_class& q) {
  mpq_class a = q < 0 ? mpq_class(-q) : q;
  return a.get_str();
}

// one monomial c*var^k, |c| already handled by caller's sign logic
static std::string term_str(const mpq_class& abs_coef, const std::string& var, int k) {
  std::string v;
  if (k == 1) v = var;
  else if (k > 1) v = var + "^" + std::to_string(k);
  if (k == 0) return abs_coef.get_str();
  if (abs_coef == 1) return v;
  return abs_coef.get_str() + "*" + v;
}

// descending-degree rendering for Q(var) numerators/denominators
static std::string poly_str_desc(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.deg(); k >= 0; --k) {
    const mpq_class& c = p.c[k];
    if (c == 0) continue;
    if (first) {
      out += (c < 0 ? "-" : "");
      out += term_str(c < 0 ? mpq_class(-c) : c, var, k);
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ");
      out += term_str(c < 0 ? mpq_class(-c) : c, var, k);
    }
  }
  return out;
}

// ascending-degree rendering for truncated polynomials
static std::string poly_str_asc(const std::vector<mpq_class>& c, const std::string& var) {
  std::string out;
  bool first = true;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (first) {
      out += (c[k] < 0 ? "-" : "");
      out += term_str(c[k] < 0 ? mpq_class(-c[k]) : c[k], var, (int)k);
      first = false;
    } else {
      out += (c[k] < 0 ? " - " : " + ");
      out += term_str(c[k] < 0 ? mpq_class(-c[k]) : c[k], var, (int)k);
    }
  }
  if (first) return "0";
  return out;
}

// a rendered polynomial is re-parse-safe unparenthesized as a numerator iff it
// is a single term; as a denominator it additionally must be a single factor
static bool needs_parens_num(const std::string& s) {
  return s.find(' ') != std::string::npos;
}
static bool needs_parens_den(const std::string& s) {
  return s.find(' ') != std::string::npos || s.find('*') != std::string::npos ||
         s.find('/') != std::string::npos || s.find('-') != std::string::npos;
}

std::string scalar_str(const Scalar& s, const Field& f) {
  switch (s.kind()) {
    case FieldKind::Rational: return q_str(s.rat());
    case FieldKind::RationalFunction: {
      const RatFun& r = s.rf();
      std::string num = poly_str_desc(r.num, f.var);
      if (r.den.deg() == 0) return num;  // den == 1 after reduction
      std::string den = poly_str_desc(r.den, f.var);
      if (needs_parens_num(num)) num = "(" + num + ")";
      if (needs_parens_den(den)) den = "(" + den + ")";
      return num + "/" + den;
    }
    default: return poly_str_asc(s.jet().c, f.var);
  }
}

// ==== parsing ===============================================================

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  bool eof() {
    skip();
    return pos >= text.size();
  }
  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void err(const std::string& msg) {
    fail(Err::Parse, "scalar '" + text + "' at position " + std::to_string(pos) + ": " + msg);
  }
};

struct ScalarParser {
  Lexer lx;
  const Field& f;

  Scalar parse() {
    Scalar v = expr();
    if (!lx.eof()) lx.err("trailing input");
    return v;
  }

  Scalar expr() {
    bool neg = false;
    if (lx.peek() == '-') {
      ++lx.pos;
      neg = true;
    } else if (lx.peek() == '+') {
      ++lx.pos;
    }
    Scalar acc = term();
    if (neg) acc = -acc;
    while (true) {
      char c = lx.peek();
      if (c == '+') {
        ++lx.pos;
        acc = acc + term();
      } else if (c == '-') {
        ++lx.pos;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Scalar term() {
    Scalar acc = power();
    while (true) {
      char c = lx.peek();
      if (c == '*') {
        ++lx.pos;
        acc = acc * power();
      } else if (c == '/') {
        ++lx.pos;
        Scalar d = power();
        try {
          acc = acc / d;
        } catch (const Error& e) {
          lx.err(e.what());
        }
      } else {
        break;
      }
    }
    return acc;
  }

  Scalar power() {
    Scalar base = atom();
    if (lx.peek() == '^') {
      ++lx.pos;
      bool neg = false;
      if (lx.peek() == '-') {
        ++lx.pos;
        neg = true;
      }
      long e = integer();
      try {
        base = pow_scalar(base, neg ? -e : e);
      } catch (const Error& e2) {
        lx.err(e2.what());
      }
    }
    return base;
  }

  long integer() {
    lx.skip();
    size_t start = lx.pos;
    while (lx.pos < lx.text.size() && std::isdigit((unsigned char)lx.text[lx.pos])) ++lx.pos;
    if (lx.pos == start) lx.err("expected integer exponent");
    return std::stol(lx.text.substr(start, lx.pos - start));
  }

  Scalar atom() {
    char c = lx.peek();
    if (c == '(') {
      ++lx.pos;
      Scalar v = expr();
      if (lx.peek() != ')') lx.err("expected ')'");
      ++lx.pos;
      return v;
    }
    if (std::isdigit((unsigned char)c)) {
      lx.skip();
      size_t start = lx.pos;
      while (lx.pos < lx.text.size() && std::isdigit((unsigned char)lx.text[lx.pos])) ++lx.pos;
      mpz_class z(lx.text.substr(start, lx.pos - start));
      return Scalar::from_rat(mpq_class(z), f);
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      lx.skip();
      size_t start = lx.pos;
      while (lx.pos < lx.text.size() &&
             (std::isalnum((unsigned char)lx.text[lx.pos]) || lx.text[lx.pos] == '_'))
        ++lx.pos;
      std::string name = lx.text.substr(start, lx.pos - start);
      if (f.kind == FieldKind::Rational)
        lx.err("variable '" + name + "' not allowed over plain rationals");
      if (name != f.var)
        lx.err("unknown variable '" + name + "' (field variable is '" + f.var + "')");
      return Scalar::variable(f);
    }
    lx.err("unexpected character");
  }
};

}  // namespace

Scalar parse_scalar(const std::string& text, const Field& f) {
  ScalarParser p{Lexer{text}, f};
  return p.parse();
}

}  // namespace ibraid
