#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ibraid/io.hpp"
#include "ibraid/twist.hpp"
#include "json.hpp"

using namespace ibraid;
using ojson = nlohmann::ordered_json;

namespace {

// ==== report plumbing =======================================================

struct CliReport {
  std::vector<AxiomResult> rows;
  ojson data = ojson::object();

  void row(const std::string& name, bool pass, const std::string& witness = "") {
    rows.push_back({name, pass, witness});
  }
  void absorb(const AxiomReport& rep, const std::string& prefix = "") {
    for (const auto& r : rep.axioms) rows.push_back({prefix + r.axiom, r.pass, r.witness});
  }
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

int emit(const std::vector<std::string>& echo, const CliReport& rep, bool json) {
  if (json) {
    ojson j;
    j["schema"] = 1;
    j["command"] = echo;
    ojson v = ojson::array();
    for (const auto& r : rep.rows)
      v.push_back({{"check", r.axiom}, {"pass", r.pass}, {"witness", r.witness}});
    j["verdicts"] = std::move(v);
    j["data"] = rep.data;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : rep.rows) {
      std::cout << (r.pass ? "pass  " : "FAIL  ") << r.axiom;
      if (!r.witness.empty()) std::cout << "  [" << r.witness << "]";
      std::cout << "\n";
    }
    for (const auto& [k, v] : rep.data.items()) {
      if (v.is_string())
        std::cout << k << " = " << v.get<std::string>() << "\n";
      else
        std::cout << k << " = " << v.dump() << "\n";
    }
  }
  return rep.all_pass() ? 0 : 1;
}

Scalar rat_flag(const std::string& text, const char* flag) {
  try {
    return parse_scalar(text, field_rationals());
  } catch (const Error& e) {
    fail(Err::Input, std::string("--") + flag + ": " + e.what());
  }
}

// ==== input resolution ======================================================

struct QtInput {
  FinBialgebra h;
  std::optional<TensorElement> r;
  std::optional<TensorElement> chi;
};

struct QtArgs {
  std::string builtin_name, bialgebra_path, r_path, chi_path;
  std::string lambda = "0", alpha = "0";

  void attach(CLI::App* sub, bool with_alpha = true) {
    sub->add_option("--builtin", builtin_name,
                    "builtin structure: sweedler | group_algebra_Z2 | trivial");
    sub->add_option("--bialgebra", bialgebra_path, "bialgebra document");
    sub->add_option("--r", r_path, "order-2 element document (R)");
    sub->add_option("--chi", chi_path, "order-2 element document (chi)");
    sub->add_option("--lambda", lambda, "R-family parameter for --builtin sweedler");
    if (with_alpha)
      sub->add_option("--alpha", alpha, "chi-family parameter for --builtin sweedler");
  }
};

TensorElement element_for(const FinBialgebra& h, const std::string& path,
                          const char* flag) {
  Document doc = load_document(path);
  if (!doc.element) fail(Err::Input, std::string("--") + flag + ": not an element document");
  if (!(*doc.field == h.field))
    fail(Err::Input, std::string("--") + flag + ": field mismatch with the bialgebra");
  if (doc.element->n != h.dim())
    fail(Err::Input, std::string("--") + flag + ": dimension mismatch with the bialgebra");
  if (doc.element->order != 2)
    fail(Err::Input, std::string("--") + flag + ": expected an order-2 element");
  return *doc.element;
}

QtInput resolve_qt(const QtArgs& a) {
  QtInput in;
  if (!a.builtin_name.empty()) {
    if (a.builtin_name == "sweedler") {
      in.h = sweedler_bialgebra();
      in.r = sweedler_R(rat_flag(a.lambda, "lambda"));
      in.chi = sweedler_chi(rat_flag(a.alpha, "alpha"));
    } else if (a.builtin_name == "group_algebra_Z2") {
      in.h = group_algebra_z2();
      in.r = group_algebra_z2_R();
      in.chi = te_zero(in.h, 2);
    } else if (a.builtin_name == "trivial") {
      in.h = trivial_bialgebra();
      in.r = te_unit(in.h, 2);
      in.chi = te_zero(in.h, 2);
    } else {
      fail(Err::UnknownBuiltin, "unknown builtin structure '" + a.builtin_name + "'");
    }
  } else {
    if (a.bialgebra_path.empty())
      fail(Err::Input, "give --builtin or --bialgebra");
    Document doc = load_document(a.bialgebra_path);
    if (!doc.bialgebra) fail(Err::Input, "--bialgebra: not a bialgebra document");
    in.h = *doc.bialgebra;
  }
  // file arguments override builtin defaults, so reported elements can be replayed
  if (!a.r_path.empty()) in.r = element_for(in.h, a.r_path, "r");
  if (!a.chi_path.empty()) in.chi = element_for(in.h, a.chi_path, "chi");
  return in;
}

const TensorElement& need_r(const QtInput& in) {
  if (!in.r) fail(Err::Input, "this command needs an R element (--r or --builtin)");
  return *in.r;
}

// ==== frt word syntax =======================================================

FRTWord parse_word(const std::string& s, int n) {
  if (s.empty() || s == "1") return {};
  if (n > 9) fail(Err::Input, "word syntax supports dimensions up to 9");
  FRTWord w;
  size_t p = 0;
  while (p < s.size()) {
    if (s[p] == 'T') ++p;
    if (p + 1 >= s.size() || !isdigit((unsigned char)s[p]) ||
        !isdigit((unsigned char)s[p + 1]))
      fail(Err::Input, "bad word '" + s + "': expected digit pairs like T11.T22");
    int i = s[p] - '1', j = s[p + 1] - '1';
    if (i < 0 || i >= n || j < 0 || j >= n)
      fail(Err::Input, "bad word '" + s + "': index out of range");
    w.push_back({i, j});
    p += 2;
    if (p < s.size()) {
      if (s[p] != '.') fail(Err::Input, "bad word '" + s + "': expected '.'");
      ++p;
    }
  }
  return w;
}

// ==== verb handlers =========================================================

void do_validate(const std::string& path, CliReport& rep) {
  Document doc = load_document(path);
  rep.data["kind"] = doc.kind;
  if (doc.bialgebra) {
    rep.absorb(validate_bialgebra(*doc.bialgebra));
  } else if (doc.braided) {
    rep.row("braid-equation", check_braid(*doc.braided));
    if (doc.braided->has_t()) rep.absorb(check_ibv(*doc.braided));
  } else if (doc.lie) {
    rep.row("lie-axioms", true);  // check_lie already ran during parsing
  } else {
    rep.row("well-formed", true);
  }
}

void do_classify(const QtArgs& args, bool co, const std::string& out_gen, CliReport& rep) {
  QtInput in = resolve_qt(args);
  QTStructure qt = make_qt(in.h, need_r(in));
  if (!co) {
    SolutionSpace sp = classify_inf_rmatrices(qt);
    rep.data["dim"] = sp.dim();
    ojson basis = ojson::array();
    for (const SRow& row : sp.basis) {
      InfRMatrix inf = inf_from_coords(qt, row);
      basis.push_back(te_str(in.h, inf.chi));
    }
    rep.data["basis"] = std::move(basis);
    if (!out_gen.empty()) {
      if (sp.dim() == 0) fail(Err::Input, "--out-generator: the solution space is zero");
      InfRMatrix gen = inf_from_coords(qt, sp.basis.front());
      save_text(out_gen, element_to_json(in.h.field, gen.chi));
    }
    rep.row("classification", true);
    return;
  }
  if (!out_gen.empty())
    fail(Err::Input, "--out-generator applies to the element-side classification only");
  CoQTStructure cq = dualize_qt(qt);
  SolutionSpace sp = classify_inf_rforms(cq);
  rep.data["dim"] = sp.dim();
  ojson basis = ojson::array();
  for (const SRow& row : sp.basis) {
    InfRForm inf = inf_form_from_coords(cq, row);
    basis.push_back(mf_str(cq.H, inf.chi));
  }
  rep.data["basis"] = std::move(basis);
  rep.row("classification", true);
}

void do_check(const QtArgs& args, const std::string& axiom, const std::string& qtext,
              CliReport& rep) {
  QtInput in = resolve_qt(args);
  auto inf = [&]() -> InfRMatrix {
    if (!in.chi) fail(Err::Input, "axiom '" + axiom + "' needs --chi (or --alpha)");
    return {make_qt(in.h, need_r(in)), *in.chi};
  };
  auto cartier_witness = [&](const InfRMatrix& m, const Scalar* q) {
    TensorElement lhs = tensor_mul(in.h, m.qt.R, m.chi);
    TensorElement rhs = tensor_mul(in.h, flip_op(m.chi), m.qt.R);
    if (q) rhs = te_scale(rhs, *q);
    return "R*chi = " + te_str(in.h, lhs) + "; " + (q ? "q*chi_op*R = " : "chi_op*R = ") +
           te_str(in.h, rhs);
  };
  if (axiom == "bialgebra") {
    rep.absorb(validate_bialgebra(in.h));
  } else if (axiom == "quasitriangular") {
    rep.absorb(check_quasitriangular(in.h, need_r(in)));
  } else if (axiom == "inf-rmatrix") {
    rep.absorb(check_inf_rmatrix(inf()));
  } else if (axiom == "cartier") {
    InfRMatrix m = inf();
    bool ok = check_cartier(m);
    rep.row("cartier", ok, ok ? "" : cartier_witness(m, nullptr));
  } else if (axiom == "q-commutation") {
    InfRMatrix m = inf();
    Scalar q = rat_flag(qtext, "q");
    bool ok = check_q_commutation(m, q);
    rep.row("q-commutation", ok, ok ? "" : cartier_witness(m, &q));
  } else if (axiom == "qyb") {
    rep.row("inf-qyb", check_inf_qyb(inf()));
  } else if (axiom == "balanced") {
    rep.row("balanced", check_balanced(inf()));
  } else if (axiom == "cocycle") {
    InfRMatrix m = inf();
    rep.row("cobar-two-cocycle", cobar_apply(in.h, m.chi).is_zero());
  } else if (axiom == "casimir") {
    CasimirReport cr = check_casimir(inf());
    rep.row("casimir-coboundary-sum", cr.coboundary_sum);
    rep.row("casimir-coboundary-two", cr.coboundary_two);
  } else if (axiom == "antipode") {
    rep.absorb(check_antipode_identities(inf()));
  } else if (axiom == "all") {
    rep.absorb(validate_bialgebra(in.h));
    rep.absorb(check_quasitriangular(in.h, need_r(in)));
    if (in.chi && !in.chi->is_zero()) {
      InfRMatrix m = inf();
      rep.absorb(check_inf_rmatrix(m));
      rep.row("inf-qyb", check_inf_qyb(m));
      rep.row("balanced", check_balanced(m));
      rep.row("cobar-two-cocycle", cobar_apply(in.h, m.chi).is_zero());
      CasimirReport cr = check_casimir(m);
      rep.row("casimir-coboundary-sum", cr.coboundary_sum);
      rep.absorb(check_antipode_identities(m));
    }
  } else {
    fail(Err::Input,
         "unknown axiom '" + axiom +
             "'; use bialgebra, quasitriangular, inf-rmatrix, cartier, q-commutation, "
             "qyb, balanced, cocycle, casimir, antipode or all");
  }
}

void do_twist(const QtArgs& args, const std::string& tpar, const std::string& fpath,
              bool by_r, CliReport& rep) {
  QtInput in = resolve_qt(args);
  TensorElement f;
  if (by_r) {
    f = need_r(in);
  } else if (!fpath.empty()) {
    f = element_for(in.h, fpath, "f");
  } else if (!args.builtin_name.empty()) {
    f = sweedler_twist(rat_flag(tpar, "t"));
  } else {
    fail(Err::Input, "give --f, --t with a builtin, or --by-r");
  }
  rep.absorb(check_twist(in.h, f));
  if (!rep.all_pass()) return;
  DrinfeldTwist tw = make_twist(in.h, f);
  FinBialgebra ht = twist_bialgebra(tw);
  rep.absorb(validate_bialgebra(ht), "twisted:");
  if (in.r) {
    QTStructure qt = make_qt(in.h, *in.r);
    QTStructure qtt = twist_qt(tw, qt);
    rep.absorb(check_quasitriangular(ht, qtt.R), "twisted-R:");
    rep.data["twisted_R"] = te_str(ht, qtt.R);
    if (in.chi) {
      InfRMatrix inf{qt, *in.chi};
      InfRMatrix inft = twist_inf(tw, inf);
      InfRMatrix rebased{qtt, inft.chi};
      rep.absorb(check_inf_rmatrix(rebased), "twisted-chi:");
      rep.data["twisted_chi"] = te_str(ht, inft.chi);
    }
  }
}

void do_hbar(const QtArgs& args, int trunc, CliReport& rep) {
  QtInput in = resolve_qt(args);
  if (in.h.field.kind != FieldKind::Rational)
    fail(Err::Input, "hbar-check expects a bialgebra over the rationals");
  if (!in.chi) fail(Err::Input, "hbar-check needs --chi or --alpha");
  QTStructure qt = make_qt(in.h, need_r(in));
  TensorElement rt = hbar_deform(qt, *in.chi, trunc);
  FinBialgebra hl = lift_bialgebra(in.h, field_truncated(trunc, "h"));
  rep.absorb(check_hbar_quasitriangular(hl, rt));
  FirstOrderData fo = extract_first_order(in.h, rt);
  rep.row("extract-R", te_eq(fo.R, qt.R));
  rep.row("extract-chi", te_eq(fo.chi, *in.chi));
  InfRMatrix back{make_qt(in.h, fo.R), fo.chi};
  AxiomReport pre = check_inf_rmatrix(back);
  rep.row("first-order-precartier", pre.all_pass(),
          pre.all_pass() ? "" : pre.summary());
  rep.data["r_tilde"] = te_str(hl, rt);
}

void do_tensor_product(const QtArgs& left, const std::string& mu, const std::string& beta,
                       CliReport& rep) {
  QtInput a = resolve_qt(left);
  if (!a.chi) fail(Err::Input, "tensor-product needs --chi or --alpha on the left factor");
  QtArgs rargs = left;
  rargs.lambda = mu;
  rargs.alpha = beta;
  QtInput b = resolve_qt(rargs);
  InfRMatrix ia{make_qt(a.h, need_r(a)), *a.chi};
  InfRMatrix ib{make_qt(b.h, need_r(b)), *b.chi};
  TensorProductResult res = tensor_product_precartier(ia, ib);
  rep.absorb(validate_bialgebra(res.H), "product:");
  rep.absorb(check_quasitriangular(res.H, res.qt.R), "product-R:");
  InfRMatrix li{res.qt, res.chi_left};
  InfRMatrix ri{res.qt, res.chi_right};
  AxiomReport lr = check_inf_rmatrix(li);
  rep.row("left-chi", lr.all_pass(), lr.all_pass() ? "" : lr.summary());
  AxiomReport rr = check_inf_rmatrix(ri);
  rep.row("right-chi", rr.all_pass(), rr.all_pass() ? "" : rr.summary());
  InfRMatrix sum{res.qt, te_add(res.chi_left, res.chi_right)};
  AxiomReport sr = check_inf_rmatrix(sum);
  rep.row("sum-chi", sr.all_pass(), sr.all_pass() ? "" : sr.summary());
  rep.data["dim"] = res.H.dim();
  rep.data["chi_left"] = te_str(res.H, res.chi_left);
  rep.data["chi_right"] = te_str(res.H, res.chi_right);
}

void do_pushforward(const QtArgs& args, CliReport& rep) {
  QtInput in = resolve_qt(args);
  if (!in.chi) fail(Err::Input, "pushforward needs --chi or --alpha");
  if (in.h.name != "sweedler")
    fail(Err::Input, "the command-line pushforward ships the canonical projection of "
                     "the 4-dimensional builtin only; use the library for other maps");
  FinBialgebra dst = group_algebra_z2();
  const Scalar one = Scalar::one(in.h.field), zero = Scalar::zero(in.h.field);
  // 1 -> 1, g -> u, x -> 0, xg -> 0
  std::vector<std::vector<Scalar>> f = {{one, zero, zero, zero}, {zero, one, zero, zero}};
  InfRMatrix src{make_qt(in.h, need_r(in)), *in.chi};
  InfRMatrix out = pushforward(dst, f, src);
  rep.absorb(check_inf_rmatrix(out), "image:");
  rep.data["image_R"] = te_str(dst, out.qt.R);
  rep.data["image_chi"] = te_str(dst, out.chi);
}

void do_dualize(const QtArgs& args, CliReport& rep) {
  QtInput in = resolve_qt(args);
  if (!in.chi) fail(Err::Input, "dualize needs --chi or --alpha");
  InfRMatrix src{make_qt(in.h, need_r(in)), *in.chi};
  InfRForm dual = dualize_inf(src);
  rep.absorb(check_inf_rform(dual), "dual:");
  InfRMatrix back = dualize_form_to_element(dual);
  rep.row("roundtrip-R", back.qt.R.c == src.qt.R.c);
  rep.row("roundtrip-chi", back.chi.c == src.chi.c);
  rep.data["dual_R"] = mf_str(dual.cq.H, dual.cq.R);
  rep.data["dual_chi"] = mf_str(dual.cq.H, dual.chi);
}

void do_cohomology(const QtArgs& args, int degree, const std::string& side,
                   CliReport& rep) {
  QtInput in = resolve_qt(args);
  CohomologyDims d;
  if (side == "coalgebra") {
    d = cohomology_dim(in.h, degree);
  } else if (side == "algebra") {
    d = bar_cohomology_dim(in.h, degree);
  } else {
    fail(Err::Input, "--side must be coalgebra or algebra");
  }
  rep.row("complex-composes-to-zero", true);
  rep.data["degree"] = degree;
  rep.data["cocycles"] = d.cocycles;
  rep.data["coboundaries"] = d.coboundaries;
  rep.data["cohomology"] = d.cohomology;
}

void do_frt(const std::string& builtin_name, const std::string& lambda,
            const std::string& path, const std::string& action, int degree,
            const std::string& qtext, const std::string& left, const std::string& right,
            CliReport& rep) {
  if (action == "slq2") {
    SolutionSpace sp = slq2_chi_obstruction(rat_flag(qtext, "q"));
    rep.data["dim"] = sp.dim();
    ojson basis = ojson::array();
    const Field f = field_rationals();
    for (const SRow& row : sp.basis) {
      std::string s;
      for (const auto& [u, v] : row) {
        int kl = u % 4, ij = u / 4;
        if (!s.empty()) s += " + ";
        s += scalar_str(v, f) + "*T" + std::to_string(ij / 2 + 1) +
             std::to_string(ij % 2 + 1) + " (x) T" + std::to_string(kl / 2 + 1) +
             std::to_string(kl % 2 + 1);
      }
      basis.push_back(s);
    }
    rep.data["basis"] = std::move(basis);
    rep.row("classification", true);
    return;
  }
  BraidedVS b;
  if (!builtin_name.empty()) {
    if (builtin_name != "mq2")
      fail(Err::UnknownBuiltin, "unknown braided builtin '" + builtin_name + "'");
    b = mq2_braided_vs(rat_flag(lambda, "lambda"));
  } else if (!path.empty()) {
    Document doc = load_document(path);
    if (!doc.braided) fail(Err::Input, "--file: not a braided_vs document");
    b = *doc.braided;
  } else {
    fail(Err::Input, "give --builtin mq2 or --file");
  }
  if (action == "braid") {
    rep.row("braid-equation", check_braid(b));
  } else if (action == "ibv") {
    rep.absorb(check_ibv(b));
  } else if (action == "dims") {
    ojson dims = ojson::array();
    for (int d = 0; d <= degree; ++d) dims.push_back(frt_component(b, d).dim);
    rep.data["dims"] = std::move(dims);
    rep.row("graded-dims", true);
  } else if (action == "descent") {
    rep.absorb(check_descent(b, degree));
  } else if (action == "eval-r" || action == "eval-rinv" || action == "eval-chi" ||
             action == "canonical-chi") {
    FRTWord w1 = parse_word(left, b.N), w2 = parse_word(right, b.N);
    Scalar v = action == "eval-r" ? eval_R(b, w1, w2)
               : action == "eval-rinv"
                   ? eval_R_inv(b, w1, w2)
                   : action == "eval-chi" ? eval_chi(b, w1, w2)
                                          : canonical_chi(b, w1, w2);
    rep.data["value"] = scalar_str(v, b.field);
    rep.row("evaluation", true);
  } else {
    fail(Err::Input, "unknown action '" + action +
                         "'; use braid, ibv, dims, descent, eval-r, eval-rinv, "
                         "eval-chi, canonical-chi or slq2");
  }
}

void do_lie(const std::string& builtin_name, const std::string& path, CliReport& rep) {
  LieAlgebraData g;
  TensorElement r;
  if (!builtin_name.empty()) {
    if (builtin_name != "sl2_r")
      fail(Err::UnknownBuiltin, "unknown lie builtin '" + builtin_name + "'");
    g = sl2_lie();
    r = sl2_r();
  } else if (!path.empty()) {
    Document doc = load_document(path);
    if (!doc.lie) fail(Err::Input, "--file: not a lie document");
    if (!doc.lie_r) fail(Err::Input, "--file: lie document carries no r");
    g = *doc.lie;
    r = *doc.lie_r;
  } else {
    fail(Err::Input, "give --builtin sl2_r or --file");
  }
  LieCheckReport lr = lie_check(g, r);
  rep.row("cybe", lr.cybe);
  rep.row("symmetrization-invariant", lr.symmetrization_invariant);
  rep.data["skew"] = lr.skew;
}

std::string builtin_text(const std::string& name, const std::string& param) {
  const Scalar p = rat_flag(param, "param");
  if (name == "mq2") return braided_to_json(mq2_braided_vs(p));
  BuiltinObject obj = builtin(name, p);
  if (obj.kind == "bialgebra") return bialgebra_to_json(*obj.H);
  if (obj.kind == "element") return element_to_json(obj.H->field, *obj.elem);
  return lie_to_json(*obj.lie, obj.elem ? &*obj.elem : nullptr);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> echo(argv + 1, argv + argc);
  CLI::App app{"exact verification of infinitesimal braidings on finite bialgebras"};
  app.require_subcommand(1);
  bool json = false;

  auto* validate = app.add_subcommand("validate", "check a document's structural axioms");
  std::string validate_path;
  validate->add_option("file", validate_path, "document to validate")->required();

  auto* classify = app.add_subcommand(
      "classify-chi", "solve for all infinitesimal structures on a fixed R");
  QtArgs classify_args;
  classify_args.attach(classify, false);
  bool classify_co = false;
  classify->add_flag("--co", classify_co, "classify forms on the dual side");
  std::string classify_out_gen;
  classify->add_option("--out-generator", classify_out_gen,
                       "write the first basis element as an element document");

  auto* check = app.add_subcommand("check", "verify a named axiom family");
  QtArgs check_args;
  check_args.attach(check);
  std::string check_axiom = "all", check_q = "-1";
  check->add_option("--axiom", check_axiom, "axiom family (default all)");
  check->add_option("--q", check_q, "parameter for q-commutation");

  auto* twistc = app.add_subcommand("twist", "twist structures by a 2-cocycle");
  QtArgs twist_args;
  twist_args.attach(twistc);
  std::string twist_t = "0", twist_f;
  bool twist_by_r = false;
  twistc->add_option("--t", twist_t, "twist-family parameter for --builtin sweedler");
  twistc->add_option("--f", twist_f, "order-2 element document (the twist)");
  twistc->add_flag("--by-r", twist_by_r, "use the R element itself as the twist");

  auto* hbar = app.add_subcommand("hbar-check",
                                  "first-order deformation over truncated polynomials");
  QtArgs hbar_args;
  hbar_args.attach(hbar);
  int hbar_trunc = 3;
  hbar->add_option("--trunc", hbar_trunc, "truncation order (default 3)")
      ->check(CLI::Range(2, 16));

  auto* tensor = app.add_subcommand("tensor-product",
                                    "tensor two structures and re-verify");
  QtArgs tensor_args;
  tensor_args.attach(tensor);
  std::string tensor_mu = "0", tensor_beta = "0";
  tensor->add_option("--mu", tensor_mu, "R parameter of the right factor");
  tensor->add_option("--beta", tensor_beta, "chi parameter of the right factor");

  auto* push = app.add_subcommand("pushforward",
                                  "transport along the canonical projection");
  QtArgs push_args;
  push_args.attach(push);

  auto* dual = app.add_subcommand("dualize", "element structures to forms and back");
  QtArgs dual_args;
  dual_args.attach(dual);

  auto* coh = app.add_subcommand("cohomology", "low-degree complex ranks");
  QtArgs coh_args;
  coh_args.attach(coh, false);
  int coh_degree = 2;
  std::string coh_side = "coalgebra";
  coh->add_option("--degree", coh_degree, "complex degree (1 or 2)")->check(CLI::Range(1, 2));
  coh->add_option("--side", coh_side, "coalgebra (default) or algebra");

  auto* frt = app.add_subcommand("frt", "braided vector spaces and graded quotients");
  std::string frt_builtin, frt_lambda = "0", frt_file, frt_action = "ibv";
  std::string frt_q = "2", frt_left = "1", frt_right = "1";
  int frt_degree = 3;
  frt->add_option("--builtin", frt_builtin, "builtin braided space: mq2");
  frt->add_option("--lambda", frt_lambda, "infinitesimal parameter for --builtin mq2");
  frt->add_option("--file", frt_file, "braided_vs document");
  frt->add_option("--action", frt_action,
                  "braid | ibv | dims | descent | eval-r | eval-rinv | eval-chi | "
                  "canonical-chi | slq2");
  frt->add_option("--degree", frt_degree, "degree bound (default 3)")->check(CLI::Range(0, 12));
  frt->add_option("--q", frt_q, "parameter for --action slq2");
  frt->add_option("--left", frt_left, "left word, e.g. T11.T22");
  frt->add_option("--right", frt_right, "right word");

  auto* lie = app.add_subcommand("lie-check", "classical structures on a Lie algebra");
  std::string lie_builtin, lie_file;
  lie->add_option("--builtin", lie_builtin, "builtin: sl2_r");
  lie->add_option("--file", lie_file, "lie document with r");

  auto* bi = app.add_subcommand("builtin", "emit a builtin object as canonical JSON");
  std::string bi_name, bi_param = "0", bi_out;
  bi->add_option("name", bi_name,
                 "sweedler | sweedler_R | sweedler_chi | sweedler_twist | "
                 "group_algebra_Z2 | group_algebra_Z2_R | trivial | sl2_r | mq2")
      ->required();
  bi->add_option("--param", bi_param, "family parameter (lambda/alpha/t)");
  bi->add_option("--out", bi_out, "write to a file instead of stdout");

  for (auto* sub : {validate, classify, check, twistc, hbar, tensor, push, dual, coh,
                    frt, lie, bi})
    sub->add_flag("--json", json, "structured report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CliReport rep;
    if (bi->parsed()) {
      std::string text = builtin_text(bi_name, bi_param);
      if (bi_out.empty())
        std::cout << text;
      else
        save_text(bi_out, text);
      return 0;
    }
    if (validate->parsed()) do_validate(validate_path, rep);
    if (classify->parsed()) do_classify(classify_args, classify_co, classify_out_gen, rep);
    if (check->parsed()) do_check(check_args, check_axiom, check_q, rep);
    if (twistc->parsed()) do_twist(twist_args, twist_t, twist_f, twist_by_r, rep);
    if (hbar->parsed()) do_hbar(hbar_args, hbar_trunc, rep);
    if (tensor->parsed()) do_tensor_product(tensor_args, tensor_mu, tensor_beta, rep);
    if (push->parsed()) do_pushforward(push_args, rep);
    if (dual->parsed()) do_dualize(dual_args, rep);
    if (coh->parsed()) do_cohomology(coh_args, coh_degree, coh_side, rep);
    if (frt->parsed())
      do_frt(frt_builtin, frt_lambda, frt_file, frt_action, frt_degree, frt_q, frt_left,
             frt_right, rep);
    if (lie->parsed()) do_lie(lie_builtin, lie_file, rep);
    return emit(echo, rep, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Err::ResourceCap ? 3 : 2;
  }
}
