#include "ibraid/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ibraid {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kSchema = 1;

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson field_json(const Field& f) {
  ojson j;
  switch (f.kind) {
    case FieldKind::Rational:
      j["kind"] = "rationals";
      break;
    case FieldKind::RationalFunction:
      j["kind"] = "rational_functions";
      j["variable"] = f.var;
      break;
    case FieldKind::TruncatedPoly:
      j["kind"] = "truncated";
      j["variable"] = f.var;
      j["order"] = f.trunc;
      break;
  }
  return j;
}

Field field_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(Err::Parse, "field: expected an object with a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "rationals") return field_rationals();
  if (kind == "rational_functions") {
    if (!j.contains("variable") || !j["variable"].is_string())
      fail(Err::Parse, "field: rational_functions needs a string 'variable'");
    return field_rational_functions(j["variable"].get<std::string>());
  }
  if (kind == "truncated") {
    if (!j.contains("variable") || !j["variable"].is_string())
      fail(Err::Parse, "field: truncated needs a string 'variable'");
    if (!j.contains("order") || !j["order"].is_number_integer() ||
        j["order"].get<int>() < 1)
      fail(Err::Parse, "field: truncated needs a positive integer 'order'");
    return field_truncated(j["order"].get<int>(), j["variable"].get<std::string>());
  }
  fail(Err::Parse, "field: unknown kind '" + kind + "'");
}

Scalar coeff_from_json(const ojson& j, const Field& f, const std::string& where) {
  if (!j.is_string())
    fail(Err::Parse, where + ": coefficient must be a string");
  try {
    return parse_scalar(j.get<std::string>(), f);
  } catch (const Error& e) {
    fail(Err::Parse, where + ": " + e.what());
  }
}

int index_from_json(const ojson& j, int n, const std::string& where) {
  if (!j.is_number_integer())
    fail(Err::Parse, where + ": index must be an integer");
  const long long v = j.get<long long>();
  if (v < 0 || v >= n) fail(Err::Parse, where + ": index out of range");
  return (int)v;
}

const ojson& want(const ojson& j, const char* key) {
  if (!j.contains(key)) fail(Err::Parse, std::string("missing field '") + key + "'");
  return j[key];
}

const ojson& want_array(const ojson& j, const char* key) {
  const ojson& v = want(j, key);
  if (!v.is_array()) fail(Err::Parse, std::string("'") + key + "' must be an array");
  return v;
}

// [i, j, ..., coeff] rows with `nidx` leading indices
void read_rows(const ojson& arr, const char* key, int nidx, int n, const Field& f,
               const std::function<void(const std::vector<int>&, const Scalar&)>& sink) {
  int at = 0;
  for (const ojson& row : arr) {
    const std::string where = std::string(key) + "[" + std::to_string(at++) + "]";
    if (!row.is_array() || (int)row.size() != nidx + 1)
      fail(Err::Parse, where + ": expected [" + std::to_string(nidx) +
                           " indices, coefficient]");
    std::vector<int> idx(nidx);
    for (int p = 0; p < nidx; ++p) idx[(size_t)p] = index_from_json(row[(size_t)p], n, where);
    sink(idx, coeff_from_json(row[(size_t)nidx], f, where));
  }
}

ojson scalar_rows(const Field& f, int nidx,
                  const std::map<std::vector<int>, Scalar>& entries) {
  ojson arr = ojson::array();
  for (const auto& [key, val] : entries) {
    ojson row = ojson::array();
    for (int p = 0; p < nidx; ++p) row.push_back(key[(size_t)p]);
    row.push_back(scalar_str(val, f));
    arr.push_back(std::move(row));
  }
  return arr;
}

// ==== per-kind serializers ==================================================

ojson bialgebra_json(const FinBialgebra& h) {
  const int n = h.dim();
  ojson j;
  j["schema"] = kSchema;
  j["kind"] = "bialgebra";
  j["name"] = h.name;
  j["field"] = field_json(h.field);
  j["basis"] = h.basis;
  std::map<std::vector<int>, Scalar> mul;
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (const auto& [k, c] : h.mul_at(i, jj)) mul.emplace(std::vector<int>{i, jj, k}, c);
  j["mul"] = scalar_rows(h.field, 3, mul);
  std::map<std::vector<int>, Scalar> com;
  for (int i = 0; i < n; ++i)
    for (const auto& t : h.comul[(size_t)i])
      com.emplace(std::vector<int>{i, t.j, t.k}, t.c);
  j["comul"] = scalar_rows(h.field, 3, com);
  std::vector<Scalar> unit((size_t)n, Scalar::zero(h.field));
  for (const auto& [k, c] : h.unit) unit[(size_t)k] = c;
  ojson ju = ojson::array(), jc = ojson::array();
  for (int i = 0; i < n; ++i) {
    ju.push_back(scalar_str(unit[(size_t)i], h.field));
    jc.push_back(scalar_str(h.counit[(size_t)i], h.field));
  }
  j["unit"] = std::move(ju);
  j["counit"] = std::move(jc);
  if (h.has_antipode()) {
    std::map<std::vector<int>, Scalar> ant;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        const Scalar& c = (*h.antipode)[(size_t)jj][(size_t)i];  // column i = S(e_i)
        if (!c.is_zero()) ant.emplace(std::vector<int>{i, jj}, c);
      }
    j["antipode"] = scalar_rows(h.field, 2, ant);
  }
  return j;
}

ojson tuple_json(const Field& f, int n, int order,
                 const std::map<std::vector<int>, Scalar>& c, const char* kind) {
  ojson j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  j["field"] = field_json(f);
  j["dim"] = n;
  j["order"] = order;
  j["terms"] = scalar_rows(f, order, c);
  return j;
}

ojson braided_json(const BraidedVS& b) {
  ojson j;
  j["schema"] = kSchema;
  j["kind"] = "braided_vs";
  j["field"] = field_json(b.field);
  j["dim"] = b.N;
  auto rows = [&](const std::vector<Scalar>& t) {
    std::map<std::vector<int>, Scalar> m;
    for (int i = 0; i < b.N; ++i)
      for (int jj = 0; jj < b.N; ++jj)
        for (int k = 0; k < b.N; ++k)
          for (int l = 0; l < b.N; ++l) {
            const Scalar& v = t[(size_t)(((i * b.N + jj) * b.N + k) * b.N) + l];
            if (!v.is_zero()) m.emplace(std::vector<int>{i, jj, k, l}, v);
          }
    return scalar_rows(b.field, 4, m);
  };
  j["c"] = rows(b.c);
  if (b.has_t()) j["t"] = rows(*b.t);
  return j;
}

ojson lie_json(const LieAlgebraData& g, const TensorElement* r) {
  ojson j;
  j["schema"] = kSchema;
  j["kind"] = "lie";
  j["field"] = field_json(g.field);
  j["basis"] = g.basis;
  std::map<std::vector<int>, Scalar> br;
  for (int i = 0; i < g.dim(); ++i)
    for (int jj = 0; jj < g.dim(); ++jj)
      for (const auto& [k, c] : g.bracket_at(i, jj))
        br.emplace(std::vector<int>{i, jj, k}, c);
  j["bracket"] = scalar_rows(g.field, 3, br);
  if (r) j["r"] = scalar_rows(g.field, 2, r->c);
  return j;
}

// ==== per-kind parsers ======================================================

FinBialgebra bialgebra_from_json(const ojson& j) {
  FinBialgebra h;
  h.field = field_from_json(want(j, "field"));
  const ojson& jn = want(j, "name");
  if (!jn.is_string()) fail(Err::Parse, "'name' must be a string");
  h.name = jn.get<std::string>();
  const ojson& jb = want_array(j, "basis");
  for (const ojson& lbl : jb) {
    if (!lbl.is_string()) fail(Err::Parse, "basis: labels must be strings");
    h.basis.push_back(lbl.get<std::string>());
  }
  const int n = h.dim();
  if (n == 0) fail(Err::Parse, "basis: must be nonempty");
  h.mul.assign((size_t)n * n, {});
  read_rows(want_array(j, "mul"), "mul", 3, n, h.field,
            [&](const std::vector<int>& idx, const Scalar& c) {
              svec_accum(h.mul[(size_t)idx[0] * n + idx[1]], idx[2], c);
            });
  h.comul.assign((size_t)n, {});
  read_rows(want_array(j, "comul"), "comul", 3, n, h.field,
            [&](const std::vector<int>& idx, const Scalar& c) {
              h.comul[(size_t)idx[0]].push_back({idx[1], idx[2], c});
            });
  const ojson& ju = want_array(j, "unit");
  if ((int)ju.size() != n) fail(Err::Parse, "unit: expected one coefficient per basis element");
  for (int i = 0; i < n; ++i) {
    Scalar c = coeff_from_json(ju[(size_t)i], h.field, "unit[" + std::to_string(i) + "]");
    if (!c.is_zero()) svec_accum(h.unit, i, c);
  }
  const ojson& jc = want_array(j, "counit");
  if ((int)jc.size() != n)
    fail(Err::Parse, "counit: expected one coefficient per basis element");
  h.counit.assign((size_t)n, Scalar::zero(h.field));
  for (int i = 0; i < n; ++i)
    h.counit[(size_t)i] =
        coeff_from_json(jc[(size_t)i], h.field, "counit[" + std::to_string(i) + "]");
  if (j.contains("antipode")) {
    std::vector<std::vector<Scalar>> s((size_t)n,
                                       std::vector<Scalar>((size_t)n, Scalar::zero(h.field)));
    const ojson& ja = j["antipode"];
    if (!ja.is_array()) fail(Err::Parse, "'antipode' must be an array");
    read_rows(ja, "antipode", 2, n, h.field,
              [&](const std::vector<int>& idx, const Scalar& c) {
                s[(size_t)idx[1]][(size_t)idx[0]] = c;  // column idx[0] = S(e_{idx[0]})
              });
    h.antipode = std::move(s);
  }
  check_wellformed(h);
  return h;
}

void tuple_from_json(const ojson& j, Document& doc, bool as_form) {
  Field f = field_from_json(want(j, "field"));
  const ojson& jd = want(j, "dim");
  if (!jd.is_number_integer() || jd.get<int>() <= 0)
    fail(Err::Parse, "'dim' must be a positive integer");
  const int n = jd.get<int>();
  const ojson& jo = want(j, "order");
  if (!jo.is_number_integer() || jo.get<int>() < 0)
    fail(Err::Parse, "'order' must be a nonnegative integer");
  const int order = jo.get<int>();
  std::map<std::vector<int>, Scalar> c;
  read_rows(want_array(j, "terms"), "terms", order, n, f,
            [&](const std::vector<int>& idx, const Scalar& v) {
              if (v.is_zero()) return;
              auto it = c.find(idx);
              if (it == c.end()) {
                c.emplace(idx, v);
              } else {
                it->second = it->second + v;
                if (it->second.is_zero()) c.erase(it);
              }
            });
  doc.field = f;
  if (as_form) {
    MultiForm m;
    m.n = n;
    m.order = order;
    m.c = std::move(c);
    doc.form = std::move(m);
  } else {
    TensorElement t;
    t.n = n;
    t.order = order;
    t.c = std::move(c);
    doc.element = std::move(t);
  }
}

BraidedVS braided_from_json(const ojson& j) {
  Field f = field_from_json(want(j, "field"));
  const ojson& jd = want(j, "dim");
  if (!jd.is_number_integer() || jd.get<int>() <= 0)
    fail(Err::Parse, "'dim' must be a positive integer");
  const int n = jd.get<int>();
  const size_t need = (size_t)n * n * n * n;
  std::optional<std::vector<Scalar>> t;

  if (j.contains("q_matrix")) {
    if (j.contains("c")) fail(Err::Parse, "give either 'c' or 'q_matrix', not both");
    auto read_matrix = [&](const char* key) {
      const ojson& jm = want_array(j, key);
      if ((int)jm.size() != n) fail(Err::Parse, std::string(key) + ": expected dim rows");
      std::vector<std::vector<Scalar>> m;
      int at = 0;
      for (const ojson& row : jm) {
        const std::string where = std::string(key) + "[" + std::to_string(at++) + "]";
        if (!row.is_array() || (int)row.size() != n)
          fail(Err::Parse, where + ": expected dim entries");
        std::vector<Scalar> out;
        for (const ojson& e : row) out.push_back(coeff_from_json(e, f, where));
        m.push_back(std::move(out));
      }
      return m;
    };
    auto q = read_matrix("q_matrix");
    if (j.contains("p_matrix")) {
      auto p = read_matrix("p_matrix");
      std::vector<Scalar> tt(need, Scalar::zero(f));
      for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
          tt[(size_t)(((i * n + jj) * n + i) * n) + jj] = p[(size_t)i][(size_t)jj];
      t = std::move(tt);
    } else if (j.contains("t")) {
      std::vector<Scalar> tt(need, Scalar::zero(f));
      read_rows(j["t"], "t", 4, n, f,
                [&](const std::vector<int>& idx, const Scalar& v) {
                  tt[(size_t)(((idx[0] * n + idx[1]) * n + idx[2]) * n) + idx[3]] = v;
                });
      t = std::move(tt);
    }
    return diagonal_braiding(f, q, std::move(t));
  }

  std::vector<Scalar> c(need, Scalar::zero(f));
  read_rows(want_array(j, "c"), "c", 4, n, f,
            [&](const std::vector<int>& idx, const Scalar& v) {
              c[(size_t)(((idx[0] * n + idx[1]) * n + idx[2]) * n) + idx[3]] = v;
            });
  if (j.contains("t")) {
    const ojson& jt = j["t"];
    if (!jt.is_array()) fail(Err::Parse, "'t' must be an array");
    std::vector<Scalar> tt(need, Scalar::zero(f));
    read_rows(jt, "t", 4, n, f, [&](const std::vector<int>& idx, const Scalar& v) {
      tt[(size_t)(((idx[0] * n + idx[1]) * n + idx[2]) * n) + idx[3]] = v;
    });
    t = std::move(tt);
  } else if (j.contains("p_matrix")) {
    fail(Err::Parse, "'p_matrix' requires 'q_matrix'");
  }
  return make_braided_vs(n, f, std::move(c), std::move(t));
}

void lie_from_json(const ojson& j, Document& doc) {
  LieAlgebraData g;
  g.field = field_from_json(want(j, "field"));
  const ojson& jb = want_array(j, "basis");
  for (const ojson& lbl : jb) {
    if (!lbl.is_string()) fail(Err::Parse, "basis: labels must be strings");
    g.basis.push_back(lbl.get<std::string>());
  }
  const int n = g.dim();
  if (n == 0) fail(Err::Parse, "basis: must be nonempty");
  g.bracket.assign((size_t)n * n, {});
  read_rows(want_array(j, "bracket"), "bracket", 3, n, g.field,
            [&](const std::vector<int>& idx, const Scalar& c) {
              svec_accum(g.bracket[(size_t)idx[0] * n + idx[1]], idx[2], c);
            });
  check_lie(g);
  doc.field = g.field;
  if (j.contains("r")) {
    const ojson& jr = j["r"];
    if (!jr.is_array()) fail(Err::Parse, "'r' must be an array");
    TensorElement r;
    r.n = n;
    r.order = 2;
    read_rows(jr, "r", 2, n, g.field,
              [&](const std::vector<int>& idx, const Scalar& c) { te_accum(r, idx, c); });
    doc.lie_r = std::move(r);
  }
  doc.lie = std::move(g);
}

}  // namespace

// ==== public api ============================================================

std::string bialgebra_to_json(const FinBialgebra& h) { return dump(bialgebra_json(h)); }

std::string element_to_json(const Field& f, const TensorElement& a) {
  return dump(tuple_json(f, a.n, a.order, a.c, "element"));
}

std::string form_to_json(const Field& f, const MultiForm& a) {
  return dump(tuple_json(f, a.n, a.order, a.c, "form"));
}

std::string braided_to_json(const BraidedVS& b) { return dump(braided_json(b)); }

std::string lie_to_json(const LieAlgebraData& g, const TensorElement* r) {
  return dump(lie_json(g, r));
}

Document parse_document(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Err::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(Err::Parse, "top level must be an object");
  const ojson& js = want(j, "schema");
  if (!js.is_number_integer() || js.get<int>() != kSchema)
    fail(Err::Parse, "unsupported schema version");
  const ojson& jk = want(j, "kind");
  if (!jk.is_string()) fail(Err::Parse, "'kind' must be a string");
  Document doc;
  doc.kind = jk.get<std::string>();
  if (doc.kind == "bialgebra") {
    doc.bialgebra = bialgebra_from_json(j);
    doc.field = doc.bialgebra->field;
  } else if (doc.kind == "element") {
    tuple_from_json(j, doc, false);
  } else if (doc.kind == "form") {
    tuple_from_json(j, doc, true);
  } else if (doc.kind == "braided_vs") {
    doc.braided = braided_from_json(j);
    doc.field = doc.braided->field;
  } else if (doc.kind == "lie") {
    lie_from_json(j, doc);
  } else {
    fail(Err::Parse, "unknown kind '" + doc.kind + "'");
  }
  return doc;
}

Document load_document(const std::string& path) { return parse_document(read_text(path)); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::Input, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::Input, "cannot write '" + path + "'");
  out << text;
}

}  // namespace ibraid
