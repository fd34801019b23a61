// tamectl: command-line front end for the tame library.
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tame/approx.hpp"
#include "tame/builders.hpp"
#include "tame/checks.hpp"
#include "tame/endo.hpp"
#include "tame/starverify.hpp"
#include "tame/tame_word.hpp"
#include "tame/torus.hpp"

using namespace tame;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string first_token(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  in >> tok;
  return tok;
}

// Accepts an endo file or a word file (evaluated).
Endo load_endo(const std::string& path) {
  std::string text = slurp(path);
  if (first_token(text) == "word") return eval_word(parse_word(text));
  return parse_endo(text);
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string order_str(const std::optional<int>& o) { return o ? std::to_string(*o) : "inf"; }

std::vector<long> parse_longs(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw ParseError("expected a comma-separated list of integers, got '" + item + "'", 1,
                       static_cast<int>(csv.find(item)) + 1);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty integer list", 1, 1);
  return out;
}

int generator_arg(const std::string& name, int n) {
  auto g = parse_generator(name, n);
  if (!g) throw Error("unknown generator '" + name + "' for n=" + std::to_string(n));
  return *g;
}

struct Options {
  std::string field = "Q";
  int jet = 0;
  std::string in, in2, out;
  std::string section = "all";
  bool check = false, det = false;
  int m = 0, k = 0, l = 0, n = 3, degree = 3, kmax = 6, target_order = 0, jet_order = 0;
  std::string b = "1", poly, word, target = "z", coef, weights, beta, exponents, gen = "z", curve;
  std::string a_star = "1", b_star = "1", f_poly, g_poly, h_poly;
};

Field field_of(const Options& o) { return Field::parse(o.field); }

int cmd_compose(const Options& o) {
  Endo a = load_endo(o.in), b = load_endo(o.in2);
  write_out(o.out, (o.jet > 0 ? compose_mod(a, b, o.jet) : compose(a, b)).str());
  return kOk;
}

int cmd_jet(const Options& o) {
  write_out(o.out, load_endo(o.in).truncate(o.jet_order).str());
  return kOk;
}

int cmd_inverse(const Options& o) {
  std::string text = slurp(o.in);
  if (first_token(text) == "word") {
    write_out(o.out, word_inverse(parse_word(text)).str());
    return kOk;
  }
  if (o.jet <= 0) throw Error("inverting an endo file needs --jet N");
  write_out(o.out, jet_inverse(parse_endo(text), o.jet).str());
  return kOk;
}

int cmd_ord(const Options& o) {
  Endo phi = load_endo(o.in);
  JetReport r = aug_order(phi);
  std::ostringstream os;
  os << "order " << order_str(r.order) << '\n';
  for (int i = 0; i < phi.nvars(); ++i)
    if (!r.discrepancy.at(i).is_zero())
      os << "discrepancy " << generator_name(phi.nvars(), i) << " " << r.discrepancy[i].str() << '\n';
  if (o.jet > 0) os << "homothety mod I^" << o.jet << " " << (is_homothety_mod(phi, o.jet) ? "yes" : "no") << '\n';
  write_out(o.out, os.str());
  return kOk;
}

int cmd_jacobian(const Options& o) {
  Endo phi = load_endo(o.in);
  std::ostringstream os;
  if (!o.det) {
    auto j = jacobian(phi);
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << "row " << generator_name(phi.nvars(), static_cast<int>(i));
      for (const auto& p : j[i]) os << " | " << p.str();
      os << '\n';
    }
  }
  os << "det " << jacobian_det(phi).str() << '\n';
  write_out(o.out, os.str());
  return kOk;
}

int cmd_abelianize(const Options& o) {
  write_out(o.out, abelianize_endo(load_endo(o.in)).str());
  return kOk;
}

int cmd_eval_word(const Options& o) {
  TameWord w = parse_word(slurp(o.in));
  write_out(o.out, (o.jet > 0 ? eval_word_mod(w, o.jet) : eval_word(w)).str());
  return kOk;
}

int cmd_build(const std::string& kind, const Options& o) {
  Field f = field_of(o);
  Scalar b = Scalar::parse(f, o.b);
  TameWord w(Variant::Commutative, 3, f);
  if (kind == "phi_m") {
    w = build_phi_m(o.m, b);
  } else if (kind == "monomial") {
    w = build_monomial_xkyl(o.k, o.l, b);
  } else if (kind == "alpha_P") {
    w = build_alpha_P(parse_polynomial(o.poly, Variant::Commutative, 3, f));
  } else if (kind == "alpha_m") {
    w = build_alpha_m(o.m, b);
  } else {
    Monomial m;
    for (char c : o.word) {
      if (c == 'x') m.push_back(0);
      else if (c == 'y') m.push_back(1);
      else if (c != '*' && c != ' ') throw ParseError("freeassoc words use the letters x and y", 1, 1);
    }
    std::optional<Scalar> coef;
    if (!o.coef.empty()) coef = Scalar::parse(f, o.coef);
    w = build_freeassoc_monomial(f, m, generator_arg(o.target, 4), coef);
  }
  write_out(o.out, w.str());
  return kOk;
}

int cmd_centralizer(const Options& o) {
  WeightAction a = o.weights.empty() ? WeightAction::standard(o.n) : WeightAction::parse(o.weights);
  const int n = static_cast<int>(a.weights.size());
  const int i = generator_arg(o.gen, n);
  std::ostringstream os;
  for (const auto& m : centralizer_support(a, i, o.degree))
    os << Polynomial::term(Variant::Commutative, n, m, Scalar::one(Field::rationals())).str() << '\n';
  write_out(o.out, os.str());
  return kOk;
}

int cmd_singular_curve(const Options& o) {
  Endo phi = load_endo(o.in);
  std::ostringstream os;
  if (!o.curve.empty()) {
    WeightVector k{parse_longs(o.curve)};
    os << "weights " << o.curve << " order " << k.order().get_str() << '\n';
    os << "min-exponent " << curve_min_exponent(phi, k) << '\n';
    os << "singular " << (is_singular(phi, k) ? "yes" : "no") << '\n';
  } else {
    if (o.jet < 2) throw Error("the grid search needs --jet N with N >= 2");
    auto w = singular_weight(phi, o.jet, o.kmax);
    os << "homothety mod I^" << o.jet << " " << (is_homothety_mod(phi, o.jet) ? "yes" : "no") << '\n';
    if (w) {
      os << "witness";
      for (long v : w->k) os << ' ' << v;
      os << " order " << w->order().get_str() << '\n';
    } else {
      os << "witness none\n";
    }
  }
  write_out(o.out, os.str());
  return kOk;
}

int cmd_normalize_torus(const Options& o) {
  TorusNormalization t = solve_torus_normalization(parse_longs(o.beta));
  std::ostringstream os;
  if (t.solvable) {
    os << "exponents";
    for (long a : t.exponents) os << ' ' << a;
    os << '\n';
  } else {
    os << "unsolvable " << t.reason << '\n';
  }
  write_out(o.out, os.str());
  return kOk;
}

int cmd_hike(const Options& o) {
  Field f = field_of(o);
  std::vector<int> exps;
  for (long e : parse_longs(o.exponents)) exps.push_back(static_cast<int>(e));
  HikingPlan plan = hiking_solve(exps, f);
  std::string text = plan.str();
  if (!text.empty() && text.back() != '\n') text += '\n';
  text += std::string("valid ") + (plan.valid() ? "yes" : "no") + '\n';
  if (!o.in.empty()) {
    if (o.jet <= 0) throw Error("hiking an endo needs --jet N");
    Endo phi = load_endo(o.in);
    text += hiking_apply(phi, plan, generator_arg(o.gen, phi.nvars()), o.jet).str();
  }
  write_out(o.out, text);
  return plan.valid() ? kOk : kFailed;
}

int cmd_inclexcl(const Options& o) {
  Field f = field_of(o);
  Polynomial d = verify_inclusion_exclusion(o.n, o.m, f);
  Polynomial want(Variant::Commutative, o.n, f);
  if (o.m == o.n) {
    long fact = 1;
    for (int i = 2; i <= o.n; ++i) fact *= i;
    want = Polynomial::term(Variant::Commutative, o.n, Monomial(o.n, 1), Scalar(f, fact));
  }
  bool ok = o.m <= o.n ? d == want : true;
  std::string s = d.is_zero() ? "0" : d.str();
  write_out(o.out, "difference " + s + "\n" + (o.m <= o.n ? std::string("expected ") + (ok ? "yes" : "no") + "\n" : ""));
  return ok ? kOk : kFailed;
}

int cmd_approximate(const Options& o) {
  Endo phi = load_endo(o.in);
  ApproxResult r = greedy_tame_approximate(phi, o.target_order);
  auto check = tame_residual_order_mod(phi, r.word, o.target_order);
  std::ostringstream rep;
  rep << "tame-report v1\n";
  rep << "approximate field=" << phi.field().name() << " order=" << o.target_order << '\n';
  rep << "letters " << r.word.size() << '\n';
  rep << "achieved " << r.achieved << '\n';
  rep << "reverified " << (check ? std::to_string(*check) : ">= " + std::to_string(o.target_order)) << '\n';
  for (int i = 0; i < static_cast<int>(r.obstruction.size()); ++i)
    if (!r.obstruction[i].is_zero())
      rep << "obstruction " << generator_name(phi.nvars(), i) << " " << r.obstruction[i].str() << '\n';
  rep << "result " << (r.complete ? "COMPLETE" : "PARTIAL") << '\n';
  if (o.out.empty() || o.out == "-") {
    std::cout << r.word.str();
    std::cerr << rep.str();
  } else {
    write_out(o.out, r.word.str());
    std::cout << rep.str();
  }
  return r.complete ? kOk : kFailed;
}

int cmd_nagata(const Options& o) {
  Field f = field_of(o);
  Endo n = nagata(f);
  if (!o.check) {
    write_out(o.out, n.str());
    return kOk;
  }
  Endo ni = nagata_inverse(f);
  Endo id = Endo::identity(Variant::Commutative, 3, f);
  Polynomial omega = parse_polynomial("y^2 + x*z", Variant::Commutative, 3, f);
  bool two_sided = compose(n, ni) == id && compose(ni, n) == id;
  bool fixed = omega.substitute(n.images()) == omega;
  auto ord = aug_order(n).order;
  Polynomial det = jacobian_det(n);
  bool ok = two_sided && fixed && ord == 3 && det == Polynomial::constant(Variant::Commutative, 3, Scalar::one(f));
  std::ostringstream os;
  os << n.str() << "inverse\n" << ni.str();
  os << "omega " << omega.str() << " fixed " << (fixed ? "yes" : "no") << '\n';
  os << "two-sided inverse " << (two_sided ? "yes" : "no") << '\n';
  os << "ord=" << order_str(ord) << '\n';
  os << "det=" << det.str() << '\n';
  os << "result " << (ok ? "PASS" : "FAIL") << '\n';
  write_out(o.out, os.str());
  return ok ? kOk : kFailed;
}

int cmd_mirror(const Options& o) {
  write_out(o.out, mirror(load_endo(o.in)).str());
  return kOk;
}

int cmd_star(const Options& o) {
  Field f = field_of(o);
  StarProduct s{Scalar::parse(f, o.a_star), Scalar::parse(f, o.b_star)};
  auto P = [&](const std::string& t) { return parse_polynomial(t, Variant::Free, o.n, f); };
  Polynomial a = P(o.f_poly), b = P(o.g_poly);
  std::ostringstream os;
  os << "star " << star(a, b, s).str() << '\n';
  int rc = kOk;
  if (!o.h_poly.empty()) {
    Polynomial c = P(o.h_poly);
    Polynomial as = associator(a, b, c, s);
    Polynomial pred = commutator(b, commutator(a, c)).scaled(s.a * s.b);
    os << "associator " << as.str() << '\n';
    os << "ab[g,[f,h]] " << pred.str() << '\n';
    os << "match " << (as == pred ? "yes" : "no") << '\n';
    if (as != pred) rc = kFailed;
  }
  write_out(o.out, os.str());
  return rc;
}

int cmd_verify(const Options& o) {
  Field f = field_of(o);
  const int jet = o.jet > 0 ? o.jet : 5;
  std::vector<SuiteReport> parts;
  if (o.section == "3" || o.section == "all") parts.push_back(filtration_checks(f, jet));
  if (o.section == "4" || o.section == "all") parts.push_back(generation_checks(f, jet));
  if (o.section == "5" || o.section == "all") parts.push_back(free_algebra_checks(f, jet));
  SuiteReport rep = merge_reports(parts);
  write_out(o.out, rep.str());
  return rep.all_passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tamectl: polynomial endomorphisms, tame words and their checks"};
  app.require_subcommand(1);
  Options o;
  int rc = kOk;
  std::string build_kind;

  auto field_opt = [&](CLI::App* c) { c->add_option("--field", o.field, "Q or Fp, e.g. F5"); };
  auto out_opt = [&](CLI::App* c) { c->add_option("-o,--out", o.out, "output file (default stdout)"); };
  auto in_opt = [&](CLI::App* c) { c->add_option("input", o.in, "endo or word file, '-' for stdin"); };

  auto* compose_cmd = app.add_subcommand("compose", "phi first, then psi");
  compose_cmd->add_option("phi", o.in, "endo or word file")->required();
  compose_cmd->add_option("psi", o.in2, "endo or word file")->required();
  compose_cmd->add_option("--jet", o.jet, "truncate modulo I^N");
  out_opt(compose_cmd);
  compose_cmd->callback([&] { rc = cmd_compose(o); });

  auto* jet_cmd = app.add_subcommand("jet", "truncate modulo I^N");
  in_opt(jet_cmd);
  jet_cmd->add_option("--order,-N", o.jet_order, "N")->required()->check(CLI::PositiveNumber);
  out_opt(jet_cmd);
  jet_cmd->callback([&] { rc = cmd_jet(o); });

  auto* inv_cmd = app.add_subcommand("inverse", "jet inverse of an endo, or inverse of a word");
  in_opt(inv_cmd);
  inv_cmd->add_option("--jet", o.jet, "modulus for endo input");
  out_opt(inv_cmd);
  inv_cmd->callback([&] { rc = cmd_inverse(o); });

  auto* ord_cmd = app.add_subcommand("ord", "augmentation order and lowest discrepancies");
  in_opt(ord_cmd);
  ord_cmd->add_option("--jet", o.jet, "also test for a homothety modulo I^N");
  out_opt(ord_cmd);
  ord_cmd->callback([&] { rc = cmd_ord(o); });

  auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian matrix and determinant");
  in_opt(jac_cmd);
  jac_cmd->add_flag("--det", o.det, "determinant only");
  out_opt(jac_cmd);
  jac_cmd->callback([&] { rc = cmd_jacobian(o); });

  auto* ab_cmd = app.add_subcommand("abelianize", "project a free endo to the polynomial ring");
  in_opt(ab_cmd);
  out_opt(ab_cmd);
  ab_cmd->callback([&] { rc = cmd_abelianize(o); });

  auto* ev_cmd = app.add_subcommand("eval-word", "evaluate a word file");
  in_opt(ev_cmd);
  ev_cmd->add_option("--jet", o.jet, "evaluate modulo I^N");
  out_opt(ev_cmd);
  ev_cmd->callback([&] { rc = cmd_eval_word(o); });

  auto* build_cmd = app.add_subcommand("build", "constructive words");
  build_cmd->require_subcommand(1);
  auto add_build = [&](const char* name, const char* help) {
    auto* c = build_cmd->add_subcommand(name, help);
    field_opt(c);
    out_opt(c);
    c->callback([&, name] { rc = cmd_build(name, o); });
    return c;
  };
  auto* b_phi = add_build("phi_m", "z -> z + b*x^m");
  b_phi->add_option("--m", o.m)->required();
  b_phi->add_option("--b", o.b, "scalar, default 1");
  auto* b_mon = add_build("monomial", "z -> z + b*x^k*y^l");
  b_mon->add_option("--k", o.k)->required();
  b_mon->add_option("--l", o.l)->required();
  b_mon->add_option("--b", o.b, "scalar, default 1");
  auto* b_ap = add_build("alpha_P", "z -> z + P(x,y)");
  b_ap->add_option("--poly,-P", o.poly, "polynomial in x, y")->required();
  auto* b_am = add_build("alpha_m", "z -> z + b*y*x^m");
  b_am->add_option("--m", o.m)->required();
  b_am->add_option("--b", o.b, "scalar, default 1");
  auto* b_fa = add_build("freeassoc", "target -> target + coef*M in K<x,y,z,t>");
  b_fa->add_option("--word", o.word, "word in x and y, e.g. xyx")->required();
  b_fa->add_option("--target", o.target, "z or t");
  b_fa->add_option("--coef", o.coef, "scalar");

  auto* cen_cmd = app.add_subcommand("centralizer", "monomials of the weight of one generator");
  cen_cmd->add_option("--weights", o.weights, "e.g. [[2],[1],[1]]; default is the standard action");
  cen_cmd->add_option("--n", o.n, "number of generators for the standard action");
  cen_cmd->add_option("--gen", o.gen, "generator name")->required();
  cen_cmd->add_option("--degree", o.degree, "maximal degree");
  out_opt(cen_cmd);
  cen_cmd->callback([&] { rc = cmd_centralizer(o); });

  auto* sc_cmd = app.add_subcommand("singular-curve", "curve test or weight-grid search");
  in_opt(sc_cmd);
  sc_cmd->add_option("--weights", o.curve, "k1,k2,...: test one weight vector");
  sc_cmd->add_option("--jet", o.jet, "N for the grid search");
  sc_cmd->add_option("--kmax", o.kmax, "grid bound");
  out_opt(sc_cmd);
  sc_cmd->callback([&] { rc = cmd_singular_curve(o); });

  auto* nt_cmd = app.add_subcommand("normalize-torus", "solve the cyclic torus equations");
  nt_cmd->add_option("--beta", o.beta, "exponents e_1,...,e_n")->required();
  out_opt(nt_cmd);
  nt_cmd->callback([&] { rc = cmd_normalize_torus(o); });

  auto* hike_cmd = app.add_subcommand("hike", "hiking plan, optionally applied to an endo");
  hike_cmd->add_option("--exponents", o.exponents, "targeted degrees, e.g. 1,2")->required();
  hike_cmd->add_option("input", o.in, "endo file to apply the plan to");
  hike_cmd->add_option("--gen", o.gen, "scaled generator");
  hike_cmd->add_option("--jet", o.jet, "jet order for the application");
  field_opt(hike_cmd);
  out_opt(hike_cmd);
  hike_cmd->callback([&] { rc = cmd_hike(o); });

  auto* ie_cmd = app.add_subcommand("inclexcl", "inclusion-exclusion difference polynomial");
  ie_cmd->add_option("--n", o.n)->required();
  ie_cmd->add_option("--m", o.m)->required();
  field_opt(ie_cmd);
  out_opt(ie_cmd);
  ie_cmd->callback([&] { rc = cmd_inclexcl(o); });

  auto* ap_cmd = app.add_subcommand("approximate", "greedy tame word with residual in H_m");
  ap_cmd->add_option("--target", o.in, "endo or word file")->required();
  ap_cmd->add_option("--order", o.target_order, "m")->required();
  ap_cmd->add_option("-o,--out", o.out, "word file; the report then goes to stdout");
  ap_cmd->callback([&] { rc = cmd_approximate(o); });

  auto* nag_cmd = app.add_subcommand("nagata", "the Nagata automorphism");
  nag_cmd->add_flag("--check", o.check, "verify inverse, invariant, order and determinant");
  field_opt(nag_cmd);
  out_opt(nag_cmd);
  nag_cmd->callback([&] { rc = cmd_nagata(o); });

  auto* mir_cmd = app.add_subcommand("mirror", "reverse every word of every image");
  in_opt(mir_cmd);
  out_opt(mir_cmd);
  mir_cmd->callback([&] { rc = cmd_mirror(o); });

  auto* star_cmd = app.add_subcommand("star", "f *_{a,b} g and the associator");
  star_cmd->set_help_flag("--help", "print this help message and exit");
  star_cmd->add_option("--a", o.a_star);
  star_cmd->add_option("--b", o.b_star);
  star_cmd->add_option("--f", o.f_poly)->required();
  star_cmd->add_option("--g", o.g_poly)->required();
  star_cmd->add_option("--h", o.h_poly, "third argument for the associator");
  star_cmd->add_option("--n", o.n, "number of generators");
  field_opt(star_cmd);
  out_opt(star_cmd);
  star_cmd->callback([&] { rc = cmd_star(o); });

  auto* vp_cmd = app.add_subcommand("verify-paper", "batch verification report");
  vp_cmd->add_option("--section", o.section, "3, 4, 5 or all")->check(CLI::IsMember({"3", "4", "5", "all"}));
  vp_cmd->add_option("--jet", o.jet, "jet order, default 5");
  field_opt(vp_cmd);
  out_opt(vp_cmd);
  vp_cmd->callback([&] { rc = cmd_verify(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return rc;
}
