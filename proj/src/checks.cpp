#include "tame/checks.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>

#include "tame/approx.hpp"
#include "tame/builders.hpp"
#include "tame/sample.hpp"
#include "tame/torus.hpp"

namespace tame {

namespace {

constexpr Variant C = Variant::Commutative;

CheckResult make(std::string id, std::string tag) {
  CheckResult r;
  r.id = std::move(id);
  r.tag = std::move(tag);
  r.passed = true;
  return r;
}

void fail(CheckResult& r, const std::string& why) {
  r.passed = false;
  if (!r.note.empty()) r.note += "; ";
  r.note += why;
}

void diff(CheckResult& r, const Endo& got, const Endo& want, const std::string& what) {
  if (got == want) return;
  for (int i = 0; i < got.nvars(); ++i) r.residual.push_back(got.image(i) - want.image(i));
  fail(r, what);
}

Polynomial var(Variant v, int n, Field f, int i) { return Polynomial::variable(v, n, f, i); }

TameWord bracket_word(const TameGen& a, const TameGen& b) {
  TameWord w(a.variant(), a.nvars(), a.field());
  w.push(a, -1).push(b, -1).push(a).push(b);
  return w;
}

CheckResult commutator_witness(Field f) {
  CheckResult r = make("f1", "commutator-witness");
  const std::uint64_t p = f.characteristic();
  int done = 0, skipped = 0;
  for (int k = 2; k <= 5; ++k)
    for (int m = 2; m <= 5; ++m) {
      if (p != 0 && k % p == 0 && m % p == 0) {
        ++skipped;
        continue;
      }
      TameGen psi1 = TameGen::elementary(0, var(C, 3, f, 1).pow(k));
      TameGen psi2 = TameGen::elementary(1, var(C, 3, f, 0).pow(m));
      auto ord = aug_order(eval_word_mod(bracket_word(psi1, psi2), m + k + 1)).order;
      ++done;
      if (ord != m + k - 1)
        fail(r, "k=" + std::to_string(k) + " m=" + std::to_string(m) + " order " +
                    (ord ? std::to_string(*ord) : std::string(">= ") + std::to_string(m + k + 1)));
    }
  std::ostringstream os;
  os << done << " pairs";
  if (skipped) os << ", " << skipped << " outside the characteristic proviso";
  r.note = r.note.empty() ? os.str() : os.str() + "; " + r.note;
  return r;
}

CheckResult commutator_bound(Field f) {
  CheckResult r = make("f2", "commutator-bound");
  std::mt19937 rng(41);
  for (int s = 0; s < 20; ++s) {
    int m = 2 + static_cast<int>(rng() % 3), k = 2 + static_cast<int>(rng() % 3);
    std::vector<Polynomial> a, b;
    for (int i = 0; i < 3; ++i) {
      a.push_back(var(C, 3, f, i) + random_poly(rng, C, 3, f, m, m + 1, 2));
      b.push_back(var(C, 3, f, i) + random_poly(rng, C, 3, f, k, k + 1, 2));
    }
    Endo phi(a), psi(b);
    const int N = m + k + 1;
    Endo c = compose_mod(compose_mod(compose_mod(jet_inverse(phi, N), jet_inverse(psi, N), N), phi, N), psi, N);
    if (aug_order(c).order.value_or(N) < m + k - 1)
      fail(r, "sample " + std::to_string(s) + " below m+k-1");
  }
  r.note = r.note.empty() ? "20 samples" : r.note;
  return r;
}

Endo endo_of(Field f, std::initializer_list<const char*> ims) {
  std::vector<Polynomial> v;
  for (const char* s : ims) v.push_back(parse_polynomial(s, C, 3, f));
  return Endo(v);
}

CheckResult homothety_grid() {
  CheckResult r = make("f3", "homothety-grid");
  const Field Q = Field::rationals();
  struct Case {
    Endo phi;
    int N;
  };
  std::vector<Case> cases = {
      {endo_of(Q, {"2*x + y^2", "2*y", "2*z + x*y"}), 2}, {endo_of(Q, {"-x + x*y", "-y", "-z + y^2"}), 2},
      {endo_of(Q, {"3*x", "3*y", "3*z"}), 2},             {endo_of(Q, {"x + y", "y", "z"}), 2},
      {endo_of(Q, {"x", "y + z + x^3", "z"}), 2},         {endo_of(Q, {"x", "y", "z + x"}), 2},
      {nagata(Q), 3},
      {endo_of(Q, {"x + y*z", "y", "z"}), 3},
      {endo_of(Q, {"-x + y*z^2", "-y + x^3", "-z"}), 3},  {endo_of(Q, {"x + y^2", "y", "z"}), 3},
      {endo_of(Q, {"x", "y + x^2", "z"}), 3},             {endo_of(Q, {"x", "y", "z + x*y"}), 3},
      {endo_of(Q, {"x + y^4", "y + x^2*z^2", "z"}), 4},   {endo_of(Q, {"2*x + y^5", "2*y", "2*z"}), 4},
      {endo_of(Q, {"x", "y", "z + x^4"}), 4},             {nagata(Q), 4},
      {endo_of(Q, {"x", "y", "z + x*y + y^5"}), 4},       {endo_of(Q, {"x + z^2", "y", "z"}), 4},
  };
  int members = 0;
  for (const auto& c : cases) {
    bool member = is_homothety_mod(c.phi, c.N);
    auto w = singular_weight(c.phi, c.N);
    members += member;
    if (member == w.has_value()) fail(r, "N=" + std::to_string(c.N) + " " + c.phi.images()[0].str());
  }
  r.note = std::to_string(cases.size()) + " fixtures, " + std::to_string(members) + " members, grid over Q" +
           (r.note.empty() ? "" : "; " + r.note);
  return r;
}

CheckResult nagata_check(Field f) {
  CheckResult r = make("f4", "nagata");
  if (f.characteristic() == 2) {
    r.note = "skipped: the closed forms need characteristic != 2";
    return r;
  }
  Endo n = nagata(f), ni = nagata_inverse(f);
  Endo id = Endo::identity(C, 3, f);
  diff(r, compose(n, ni), id, "N*N^-1");
  diff(r, compose(ni, n), id, "N^-1*N");
  Polynomial omega = parse_polynomial("y^2 + x*z", C, 3, f);
  if (omega.substitute(n.images()) != omega) fail(r, "omega moved");
  if (aug_order(n).order != 3) fail(r, "aug_order != 3");
  if (jacobian_det(n) != Polynomial::constant(C, 3, Scalar::one(f))) fail(r, "det != 1");
  return r;
}

CheckResult jet_inversion(Field f, int N) {
  CheckResult r = make("f5", "jet-inverse");
  std::mt19937 rng(43);
  for (int s = 0; s < 10; ++s) {
    Variant v = s % 2 ? Variant::Free : C;
    Endo phi = eval_word(random_tame_word(rng, v, 3, f, v == C ? 3 : 2, 2 + s % 3));
    Endo inv = jet_inverse(phi, N);
    Endo id = Endo::identity(v, 3, f);
    diff(r, compose_mod(phi, inv, N), id, "right inverse, sample " + std::to_string(s));
    diff(r, compose_mod(inv, phi, N), id, "left inverse, sample " + std::to_string(s));
  }
  if (f.characteristic() != 2) diff(r, jet_inverse(nagata(f), N), nagata_inverse(f).truncate(N), "Nagata closed form");
  r.note = (r.note.empty() ? "" : r.note + "; ") + "N=" + std::to_string(N);
  return r;
}

CheckResult abelianization(Field f) {
  CheckResult r = make("f6", "abelianization");
  std::mt19937 rng(47);
  for (int s = 0; s < 10; ++s) {
    Endo a = eval_word(random_tame_word(rng, Variant::Free, 3, f, 2, 2));
    Endo b = eval_word(random_tame_word(rng, Variant::Free, 3, f, 2, 2));
    diff(r, abelianize_endo(compose(a, b)), compose(abelianize_endo(a), abelianize_endo(b)),
         "sample " + std::to_string(s));
  }
  return r;
}

CheckResult builder_phi_m(Field f) {
  CheckResult r = make("g1", "phi_m");
  for (int m = 1; m <= 6; ++m)
    for (long bn : {1L, -1L, 2L, 3L, -7L}) {
      Scalar b(f, bn);
      if (b.is_zero()) continue;
      Polynomial target = var(C, 3, f, 0).pow(m).scaled(b);
      diff(r, eval_word(build_phi_m(m, b)), Endo::elementary(2, target), "m=" + std::to_string(m));
    }
  return r;
}

CheckResult builder_monomial(Field f) {
  CheckResult r = make("g2", "monomial");
  if (f.characteristic() == 2) {
    r.note = "skipped: no construction in characteristic 2";
    return r;
  }
  int built = 0;
  for (int k = 0; k <= 6; ++k)
    for (int l = 0; k + l <= 6; ++l) {
      if (k + l == 0) continue;
      Monomial mono{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l), 0};
      try {
        TameWord w = build_monomial_xkyl(k, l, Scalar::one(f));
        diff(r, eval_word(w), Endo::elementary(2, Polynomial::term(C, 3, mono, Scalar::one(f))),
             "x^" + std::to_string(k) + "*y^" + std::to_string(l));
        ++built;
      } catch (const Error& e) {
        fail(r, e.what());
      }
    }
  r.note = std::to_string(built) + " monomials built" + (r.note.empty() ? "" : "; " + r.note);
  return r;
}

CheckResult builder_alpha(Field f) {
  CheckResult r = make("g3", "alpha");
  std::mt19937 rng(53);
  for (int s = 0; s < 10; ++s) {
    Polynomial p = random_poly(rng, C, 3, f, 1, 5, 4, {0, 1});
    diff(r, eval_word(build_alpha_P(p)), Endo::elementary(2, p), "alpha_P sample " + std::to_string(s));
  }
  for (int m = 0; m <= 5; ++m) {
    Polynomial target = var(C, 3, f, 1) * var(C, 3, f, 0).pow(m);
    diff(r, eval_word(build_alpha_m(m, Scalar::one(f))), Endo::elementary(2, target), "alpha_m m=" + std::to_string(m));
  }
  return r;
}

CheckResult builder_freeassoc(Field f) {
  CheckResult r = make("g4", "freeassoc");
  int words = 0;
  for (int len = 1; len <= 5; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      Monomial m;
      for (int i = 0; i < len; ++i) m.push_back((bits >> (len - 1 - i)) & 1);
      Polynomial target = Polynomial::term(Variant::Free, 4, m, Scalar::one(f));
      diff(r, eval_word(build_freeassoc_monomial(f, m)), Endo::elementary(2, target), target.str());
      ++words;
    }
  r.note = std::to_string(words) + " words" + (r.note.empty() ? "" : "; " + r.note);
  return r;
}

Scalar nonzero_scalar(std::mt19937& rng, Field f) {
  for (;;) {
    Scalar s(f, static_cast<long>(rng() % 9) - 4);
    if (!s.is_zero()) return s;
  }
}

CheckResult torus_oracle(Field f) {
  CheckResult r = make("g5", "torus-conjugate");
  if (f.characteristic() == 2) {
    r.note = "skipped: the torus over F2 is trivial";
    return r;
  }
  std::mt19937 rng(59);
  for (int s = 0; s < 30; ++s) {
    Variant v = s % 3 == 2 ? Variant::Free : C;
    TorusElement a, b;
    for (int i = 0; i < 3; ++i) {
      a.lambda.push_back(nonzero_scalar(rng, f));
      b.lambda.push_back(nonzero_scalar(rng, f));
    }
    std::vector<Polynomial> ims;
    for (int i = 0; i < 3; ++i) ims.push_back(random_poly(rng, v, 3, f, 1, 3, 3));
    Endo phi(ims);
    diff(r, torus_conjugate(a, phi, b), compose(compose(a.endo(v), phi), b.endo(v)), "sample " + std::to_string(s));
  }
  return r;
}

CheckResult centralizer(Field) {
  CheckResult r = make("g6", "centralizer");
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i < n; ++i) {
      Monomial e(n, 0);
      e[i] = 1;
      if (centralizer_support(WeightAction::standard(n), i, 3) != std::vector<Monomial>{e})
        fail(r, "standard action n=" + std::to_string(n));
    }
  WeightAction a{2, {{1, 1}, {1, 0}, {0, 1}, {1, 0}, {1, 0}}};
  std::vector<Monomial> want = {{1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 1, 0, 1}};
  std::sort(want.begin(), want.end(), MonomialLess{C});
  if (centralizer_support(a, 0, 2) != want) fail(r, "rank-2 action");
  WeightAction b = WeightAction::parse("[[2],[1],[1],[1]]");
  std::vector<Monomial> wb = {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 0},
                              {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 2}};
  std::sort(wb.begin(), wb.end(), MonomialLess{C});
  if (centralizer_support(b, 0, 2) != wb) fail(r, "weight (2,1,1,1)");
  return r;
}

CheckResult normalization() {
  CheckResult r = make("g7", "normalize-torus");
  int solved = 0;
  std::mt19937 rng(61);
  for (int s = 0; s < 20; ++s) {
    int n = 3 + s % 4;
    std::vector<long> e;
    for (int i = 0; i < n; ++i) e.push_back(static_cast<long>(rng() % 7) - 3);
    TorusNormalization t = solve_torus_normalization(e);
    if (!t.solvable) continue;
    ++solved;
    // b^(e_i + a_i - a_{i+1} - a_{i+2}) = 1 for a transcendental b.
    for (int i = 0; i < n; ++i)
      if (e[i] + t.exponents[i] - t.exponents[(i + 1) % n] - t.exponents[(i + 2) % n] != 0)
        fail(r, "equation " + std::to_string(i) + " of sample " + std::to_string(s));
  }
  r.note = std::to_string(solved) + " of 20 systems solvable over Z" + (r.note.empty() ? "" : "; " + r.note);
  return r;
}

CheckResult hiking_plans(Field f) {
  CheckResult r = make("h1", "hiking-plan");
  std::mt19937 rng(67);
  int solved = 0;
  for (int s = 0; s < 20; ++s) {
    std::vector<int> exps;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) exps.push_back(1 + static_cast<int>(rng() % 5));
    HikingPlan plan;
    try {
      plan = hiking_solve(exps, f);
    } catch (const Error&) {
      continue;
    }
    ++solved;
    if (!plan.valid()) fail(r, "invalid plan " + plan.str());
  }
  if (solved == 0) {
    r.degenerate = true;
    r.note = "no plan exists over " + f.name();
  } else {
    r.note = std::to_string(solved) + " of 20 exponent sets solvable" + (r.note.empty() ? "" : "; " + r.note);
  }
  return r;
}

CheckResult hiking_cancellation(Field f) {
  CheckResult r = make("h2", "hiking-apply");
  std::mt19937 rng(71);
  int applied = 0;
  for (int s = 0; s < 10; ++s) {
    Variant v = s % 2 ? Variant::Free : C;
    const int n = 3, N0 = 3 + s % 3, N = N0 + 3;
    std::vector<int> exps = {1 + s % 3};
    if (s % 2) exps.push_back(exps[0] + 1);
    HikingPlan plan;
    try {
      plan = hiking_solve(exps, f);
    } catch (const Error&) {
      continue;
    }
    Polynomial x = var(v, n, f, 0), y = var(v, n, f, 1), z = var(v, n, f, 2);
    Polynomial low = random_poly(rng, v, n, f, N0, N0, 3, {0, 1});
    for (int j = 1; j <= 3 && j <= N0; ++j) low += z.pow(j) * x.pow(N0 - j);
    Endo phi({x, y + low + random_poly(rng, v, n, f, N0 + 1, N0 + 2, 2),
              z + random_poly(rng, v, n, f, N0, N0 + 1, 2, {0, 1})});
    Polynomial got = hiking_apply(phi, plan, 2, N).image(1).homogeneous_part(N0);
    ++applied;
    for (int e : exps)
      if (!graded_part(got, 2, e).is_zero()) {
        r.residual.push_back(graded_part(got, 2, e));
        fail(r, "component " + std::to_string(e) + " survives in sample " + std::to_string(s));
      }
    if (graded_part(got, 2, 0) != graded_part(low, 2, 0)) fail(r, "z-free part changed in sample " + std::to_string(s));
  }
  if (applied == 0) {
    r.degenerate = true;
    r.note = "no plan exists over " + f.name();
  }
  return r;
}

CheckResult inclusion_exclusion(Field f) {
  CheckResult r = make("h3", "inclusion-exclusion");
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      Polynomial want(C, n, f);
      if (m == n) {
        long fact = 1;
        Monomial all(n, 1);
        for (int i = 2; i <= n; ++i) fact *= i;
        want = Polynomial::term(C, n, all, Scalar(f, fact));
      }
      Polynomial got = verify_inclusion_exclusion(n, m, f);
      if (got != want) {
        r.residual.push_back(got - want);
        fail(r, "n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  return r;
}

SuiteReport report(Field f, int jet, std::vector<std::future<CheckResult>> parts) {
  SuiteReport rep;
  rep.field = f.name();
  rep.jet = jet;
  for (auto& p : parts) rep.checks.push_back(p.get());
  return rep;
}

// Library errors become a failed (or, in characteristic 2, skipped) check.
template <class Fn>
std::future<CheckResult> run(std::string id, std::string tag, Field f, Fn fn) {
  return std::async(std::launch::async, [=] {
    try {
      return fn();
    } catch (const Error& e) {
      CheckResult r = make(id, tag);
      if (f.characteristic() == 2) {
        r.note = std::string("skipped: ") + e.what();
      } else {
        fail(r, e.what());
      }
      return r;
    }
  });
}

}  // namespace

SuiteReport filtration_checks(Field f, int jet) {
  if (jet < 4) throw Error("jet order must be at least 4");
  std::vector<std::future<CheckResult>> parts;
  parts.push_back(run("f1", "commutator-witness", f, [f] { return commutator_witness(f); }));
  parts.push_back(run("f2", "commutator-bound", f, [f] { return commutator_bound(f); }));
  parts.push_back(run("f3", "homothety-grid", f, [] { return homothety_grid(); }));
  parts.push_back(run("f4", "nagata", f, [f] { return nagata_check(f); }));
  parts.push_back(run("f5", "jet-inverse", f, [f, jet] { return jet_inversion(f, jet + 3); }));
  parts.push_back(run("f6", "abelianization", f, [f] { return abelianization(f); }));
  return report(f, jet, std::move(parts));
}

SuiteReport generation_checks(Field f, int jet) {
  if (jet < 4) throw Error("jet order must be at least 4");
  std::vector<std::future<CheckResult>> parts;
  parts.push_back(run("g1", "phi_m", f, [f] { return builder_phi_m(f); }));
  parts.push_back(run("g2", "monomial", f, [f] { return builder_monomial(f); }));
  parts.push_back(run("g3", "alpha", f, [f] { return builder_alpha(f); }));
  parts.push_back(run("g4", "freeassoc", f, [f] { return builder_freeassoc(f); }));
  parts.push_back(run("g5", "torus-conjugate", f, [f] { return torus_oracle(f); }));
  parts.push_back(run("g6", "centralizer", f, [f] { return centralizer(f); }));
  parts.push_back(run("g7", "normalize-torus", f, [] { return normalization(); }));
  return report(f, jet, std::move(parts));
}

SuiteReport free_algebra_checks(Field f, int jet) {
  auto suite = std::async(std::launch::async, [f, jet] { return verify_suite(jet, f); });
  std::vector<std::future<CheckResult>> parts;
  parts.push_back(run("h1", "hiking-plan", f, [f] { return hiking_plans(f); }));
  parts.push_back(run("h2", "hiking-apply", f, [f] { return hiking_cancellation(f); }));
  parts.push_back(run("h3", "inclusion-exclusion", f, [f] { return inclusion_exclusion(f); }));
  SuiteReport rest = report(f, jet, std::move(parts));
  SuiteReport rep = suite.get();
  rep.checks.insert(rep.checks.end(), rest.checks.begin(), rest.checks.end());
  return rep;
}

SuiteReport merge_reports(const std::vector<SuiteReport>& parts) {
  if (parts.empty()) throw Error("nothing to merge");
  SuiteReport rep;
  rep.field = parts.front().field;
  rep.jet = parts.front().jet;
  for (const auto& p : parts) {
    if (p.field != rep.field || p.jet != rep.jet) throw Error("reports disagree on field or jet");
    rep.checks.insert(rep.checks.end(), p.checks.begin(), p.checks.end());
  }
  return rep;
}

}  // namespace tame
