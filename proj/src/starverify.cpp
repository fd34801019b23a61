#include "tame/starverify.hpp"

#include <future>
#include <random>
#include <sstream>

#include "tame/tame_word.hpp"

namespace tame {

namespace {

void require_free(const Polynomial& p) {
  if (p.variant() != Variant::Free) throw Error("star products live on the free algebra");
}

}  // namespace

Polynomial star(const Polynomial& f, const Polynomial& g, const StarProduct& s) {
  require_free(f);
  f.check_compatible(g);
  return (f * g).scaled(s.a) + (g * f).scaled(s.b);
}

Polynomial associator(const Polynomial& f, const Polynomial& g, const Polynomial& h, const StarProduct& s) {
  return star(star(f, g, s), h, s) - star(f, star(g, h, s), s);
}

Polynomial commutator(const Polynomial& u, const Polynomial& v) { return u * v - v * u; }

Endo mirror(const Endo& phi) {
  if (phi.variant() != Variant::Free) throw Error("mirror needs the free algebra");
  std::vector<Polynomial> ims;
  for (const auto& p : phi.images()) ims.push_back(p.reversed());
  return Endo(std::move(ims));
}

Polynomial apply_derivation(const Polynomial& p, int g, const Polynomial& q) {
  p.check_compatible(q);
  const Variant v = p.variant();
  const int n = p.nvars();
  Polynomial out(v, n, p.field());
  for (const auto& [m, c] : p.terms()) {
    if (v == Variant::Free) {
      for (std::size_t pos = 0; pos < m.size(); ++pos) {
        if (m[pos] != static_cast<std::uint32_t>(g)) continue;
        Monomial left(m.begin(), m.begin() + pos), right(m.begin() + pos + 1, m.end());
        Polynomial l = Polynomial::term(v, n, left, c);
        Polynomial r = Polynomial::term(v, n, right, Scalar::one(p.field()));
        out += l * q * r;
      }
    } else if (m[g] > 0) {
      Monomial rest = m;
      --rest[g];
      out += Polynomial::term(v, n, rest, c * Scalar(p.field(), static_cast<long>(m[g]))) * q;
    }
  }
  return out;
}

std::size_t CheckResult::residual_size() const {
  std::size_t s = 0;
  for (const auto& p : residual) s += p.size();
  return s;
}

bool SuiteReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string SuiteReport::str() const {
  std::ostringstream os;
  os << "tame-report v1\n";
  os << "suite field=" << field << " jet=" << jet << '\n';
  for (const auto& c : checks) {
    os << c.id << ' ' << c.tag << ' ' << (c.passed ? "PASS" : "FAIL") << " residual=" << c.residual_size();
    if (c.degenerate) os << " degenerate";
    os << '\n';
    for (const auto& p : c.residual)
      if (!p.is_zero()) os << "  diff " << p.str() << '\n';
    if (!c.note.empty()) os << "  note " << c.note << '\n';
  }
  os << "result " << (all_passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

namespace {

struct Ring {
  Variant v;
  int n;
  Field f;

  Polynomial p(const char* s) const { return parse_polynomial(s, v, n, f); }
  TameGen elem(int i, const char* s) const { return TameGen::elementary(i, p(s)); }
  TameGen elem(int i, const Polynomial& q) const { return TameGen::elementary(i, q); }
  TameWord word(std::initializer_list<std::pair<TameGen, int>> letters) const {
    TameWord w(v, n, f);
    for (const auto& [g, e] : letters) w.push(g, e);
    return w;
  }
  Endo endo(std::initializer_list<const char*> ims) const {
    std::vector<Polynomial> out;
    for (auto s : ims) out.push_back(p(s));
    return Endo(std::move(out));
  }
};

// Image-wise difference a - b; empty when equal.
std::vector<Polynomial> diff(const Endo& a, const Endo& b) {
  std::vector<Polynomial> out;
  bool any = false;
  for (int i = 0; i < a.nvars(); ++i) {
    out.push_back(a.image(i) - b.image(i));
    any = any || !out.back().is_zero();
  }
  if (!any) out.clear();
  return out;
}

void absorb(CheckResult& r, std::vector<Polynomial> d) {
  if (d.empty()) return;
  r.passed = false;
  for (auto& p : d) r.residual.push_back(std::move(p));
}

Scalar sample_lambda(Field f) {
  for (long l : {3L, 2L, 1L})
    if (!Scalar(f, l).is_zero()) return Scalar(f, l);
  return Scalar::one(f);
}

std::vector<int> jets(int n_max) { return n_max == 4 ? std::vector<int>{4} : std::vector<int>{4, n_max}; }

// phi1 : x -> x + yz, phi2 : z -> z + yx; commutator is x -> x + y^2 x, z -> z - y^2 z mod I^4.
CheckResult check_xyyz(Field f, int n_max) {
  CheckResult r{"i", "commutator-xyyz", true, false, {}, {}};
  Ring R{Variant::Free, 3, f};
  TameGen phi1 = R.elem(0, "y*z"), phi2 = R.elem(2, "y*x");
  TameWord w = R.word({{phi2, -1}, {phi1, -1}, {phi2, 1}, {phi1, 1}});
  Endo expect = R.endo({"x + y*y*x", "y", "z - y*y*z"});
  for (int N : jets(n_max)) absorb(r, diff(eval_word_mod(w, N).truncate(4), expect));

  // the same word with both letters twisted by *_{1,lambda}
  StarProduct s{Scalar::one(f), sample_lambda(f)};
  Polynomial x = R.p("x"), y = R.p("y"), z = R.p("z");
  TameWord tw = R.word({{R.elem(2, star(y, x, s)), -1}, {R.elem(0, star(y, z, s)), -1},
                        {R.elem(2, star(y, x, s)), 1}, {R.elem(0, star(y, z, s)), 1}});
  Endo texpect({x + star(y, star(y, x, s), s), y, z - star(y, star(y, z, s), s)});
  absorb(r, diff(eval_word_mod(tw, 4), texpect));
  return r;
}

// psi1 : x -> x + y^2, psi2 : z -> z + x^2; commutator z -> z + y^2 x + x y^2 mod I^4.
CheckResult check_square(Field f, int n_max) {
  CheckResult r{"ii", "commutator-square", true, false, {}, {}};
  Ring R{Variant::Free, 3, f};
  TameGen psi1 = R.elem(0, "y^2"), psi2 = R.elem(2, "x^2");
  TameWord w = R.word({{psi1, -1}, {psi2, -1}, {psi1, 1}, {psi2, 1}});
  Endo expect = R.endo({"x", "y", "z + y^2*x + x*y^2"});
  for (int N : jets(n_max)) absorb(r, diff(eval_word_mod(w, N).truncate(4), expect));
  auto exact = diff(eval_word(w), expect);
  if (!exact.empty()) {
    std::string extra;
    for (const auto& p : exact)
      if (!p.is_zero()) extra += (extra.empty() ? "" : "; ") + p.str();
    r.note = "exact commutator differs from the display by degree >= 4 terms: " + extra;
  }
  return r;
}

// (y*y)*x + x*(y*y) - (x*y)*y - y*(y*x) = 2 lambda [y,[y,x]] for * = *_{1,lambda}.
CheckResult check_square_star(Field f, int n_max) {
  CheckResult r{"iii", "star-square", true, false, {}, {}};
  Ring R{Variant::Free, 3, f};
  Polynomial x = R.p("x"), y = R.p("y");
  StarProduct s{Scalar::one(f), sample_lambda(f)};
  Polynomial lhs = star(star(y, y, s), x, s) + star(x, star(y, y, s), s) - star(star(x, y, s), y, s) -
                   star(y, star(y, x, s), s);
  Polynomial rhs = commutator(y, commutator(y, x)).scaled(Scalar(f, 2L) * s.b);
  if (lhs != rhs) {
    r.passed = false;
    r.residual.push_back(lhs - rhs);
  }
  // untwisted side: phi_l^-1 phi_r^-1 [psi1, psi2] is the identity mod I^4
  TameGen phil = R.elem(2, "y^2*x"), phir = R.elem(2, "x*y^2");
  TameGen psi1 = R.elem(0, "y^2"), psi2 = R.elem(2, "x^2");
  TameWord w = R.word({{phil, -1}, {phir, -1}, {psi1, -1}, {psi2, -1}, {psi1, 1}, {psi2, 1}});
  Endo id = Endo::identity(R.v, R.n, f);
  for (int N : jets(n_max)) absorb(r, diff(eval_word_mod(w, N).truncate(4), id));
  if (f.characteristic() == 2) {
    r.degenerate = true;
    r.note = "coefficient 2*lambda vanishes in characteristic 2; the identity carries no information";
  }
  Polynomial printed = commutator(x, commutator(x, y)).scaled(Scalar(f, 4L) * s.b);
  if (printed != lhs)
    r.note += std::string(r.note.empty() ? "" : "; ") + "differs from 4*lambda*[x,[x,y]] by " + (lhs - printed).str();
  return r;
}

// n = 4: gamma = h alpha^-1 beta alpha and gamma' = eps^-1 delta^-1 eps delta both give t -> t - x^2 y.
CheckResult check_gamma(Field f, int) {
  CheckResult r{"iv", "gamma-n4", true, false, {}, {}};
  Ring R{Variant::Free, 4, f};
  TameGen alpha = R.elem(2, "x*y"), beta = R.elem(3, "x*z");
  TameGen h = beta.inverse();
  TameWord g = R.word({{h, 1}, {alpha, -1}, {beta, 1}, {alpha, 1}});
  TameGen delta = R.elem(2, "x^2"), eps = R.elem(3, "z*y");
  TameWord g2 = R.word({{eps, -1}, {delta, -1}, {eps, 1}, {delta, 1}});
  Endo expect = R.endo({"x", "y", "z", "t - x^2*y"});
  absorb(r, diff(eval_word(g), expect));
  absorb(r, diff(eval_word(g2), expect));

  Matrix kappa(4, 4, f);
  kappa(0, 0) = kappa(1, 2) = kappa(2, 3) = kappa(3, 1) = Scalar::one(f);
  TameGen k = TameGen::linear(R.v, kappa);
  absorb(r, diff(eval_word(R.word({{k, 1}, {alpha, 1}, {k, -1}})), beta.endo()));

  // x*(x*y) - x^2*y as a function of (a,b): A a^2 + B ab + C b^2 + D a + E b
  Polynomial x = R.p("x"), y = R.p("y");
  auto res = [&](long a, long b) {
    StarProduct s{Scalar(f, a), Scalar(f, b)};
    return star(x, star(x, y, s), s) - star(x * x, y, s);
  };
  Polynomial r10 = res(1, 0), r20 = res(2, 0), r01 = res(0, 1), r02 = res(0, 2), r11 = res(1, 1);
  Scalar two(f, 2L);
  if (f.characteristic() == 2) {
    r.note = "star obstruction not separated in characteristic 2";
  } else {
    Polynomial A = (r20 - r10.scaled(two)).scaled(two.inverse());
    Polynomial D = r10 - A;
    Polynomial C = (r02 - r01.scaled(two)).scaled(two.inverse());
    Polynomial E = r01 - C;
    Polynomial B = r11 - A - C - D - E;
    std::vector<Polynomial> got = {A, B, C, D, E};
    std::vector<Polynomial> want = {R.p("x*x*y"), R.p("2*x*y*x"), R.p("y*x*x"), R.p("-x*x*y"), R.p("-y*x*x")};
    for (std::size_t i = 0; i < got.size(); ++i)
      if (got[i] != want[i]) {
        r.passed = false;
        r.residual.push_back(got[i] - want[i]);
      }
    r.note = "x*(x*y) - x^2*y = (a^2 - a)*" + A.str() + " + a*b*(" + B.str() + ") + (b^2 - b)*" + C.str() +
             "; zero iff (a,b) in {(0,0),(1,0),(0,1)}";
  }
  return r;
}

// u = phi^-1 M'^-1 phi M' with M' : z -> z + M_{k_1..k_{s-1}} and phi the y- (even s) or x- (odd s) map.
CheckResult check_u(Field f, int n_max) {
  CheckResult r{"v", "u-commutator", true, false, {}, {}};
  Ring R{Variant::Free, 3, f};
  Polynomial x = R.p("x"), y = R.p("y"), z = R.p("z");
  int cases = 0;
  std::vector<std::vector<int>> indices;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; a + b <= 5; ++b) {
      indices.push_back({a, b});
      for (int c = 1; a + b + c <= 5; ++c) indices.push_back({a, b, c});
    }
  for (const auto& ks : indices) {
    const int s = static_cast<int>(ks.size());
    Polynomial mp = Polynomial::constant(R.v, R.n, Scalar::one(f));
    int k = 0;
    for (int i = 0; i + 1 < s; ++i) {
      mp = mp * (i % 2 == 0 ? x : y).pow(ks[i]);
      k += ks[i];
    }
    k += ks.back();
    const bool even = s % 2 == 0;
    const int moved = even ? 1 : 0;
    Polynomial tail = (even ? x : y).pow(ks.back());
    TameGen phi = R.elem(moved, z * tail);
    TameGen mz = R.elem(2, mp);
    TameWord w = R.word({{phi, -1}, {mz, -1}, {phi, 1}, {mz, 1}});
    std::vector<Polynomial> ims = {x, y, z};
    ims[moved] = ims[moved] - mp * tail;
    ims[2] = ims[2] + apply_derivation(mp, moved, z * tail);
    Endo expect(ims);
    for (int N : {k + 1, std::max(k + 1, n_max)}) absorb(r, diff(eval_word_mod(w, N).truncate(k + 1), expect));
    ++cases;
  }
  r.note = std::to_string(cases) + " multi-indices; lead of the moved generator is -M'*" +
           std::string("x^k_s (even s) or -M'*y^k_s (odd s), z lead is D(M')");
  return r;
}

// phi_Q phi_P phi_Q^-1 = phi_{P_Q} in K[x1..x4].
CheckResult check_substitution(Field f, int) {
  CheckResult r{"vi", "substitution-conjugate", true, false, {}, {}};
  const int n = 4;
  const Variant v = Variant::Commutative;
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> coef(-3, 3), deg(1, 3), pick(0, 2);
  auto rand_poly = [&](int nv) {
    Polynomial p(v, n, f);
    for (int t = 0; t < 4; ++t) {
      Monomial m(n, 0);
      int d = deg(rng);
      for (int j = 0; j < d; ++j) ++m[nv == 2 ? pick(rng) % 2 : pick(rng)];
      p.add_term(m, Scalar(f, static_cast<long>(coef(rng))));
    }
    return p;
  };
  for (int sample = 0; sample < 8; ++sample) {
    Polynomial p = rand_poly(3), q = rand_poly(2);
    TameGen phiP = TameGen::elementary(3, p), phiQ = TameGen::elementary(2, q);
    TameWord w(v, n, f);
    w.push(phiQ).push(phiP).push(phiQ, -1);
    std::vector<Polynomial> sub;
    for (int i = 0; i < n; ++i) sub.push_back(Polynomial::variable(v, n, f, i));
    sub[2] = sub[2] + q;
    absorb(r, diff(eval_word(w), Endo::elementary(3, p.substitute(sub))));
  }
  return r;
}

}  // namespace

SuiteReport verify_suite(int n_max, Field f) {
  if (n_max < 4) throw Error("jet order must be at least 4");
  using Check = CheckResult (*)(Field, int);
  const std::vector<Check> all = {check_xyyz, check_square, check_square_star, check_gamma, check_u, check_substitution};
  std::vector<std::future<CheckResult>> running;
  for (Check c : all) running.push_back(std::async(std::launch::async, c, f, n_max));
  SuiteReport rep;
  rep.field = f.name();
  rep.jet = n_max;
  for (auto& fut : running) rep.checks.push_back(fut.get());
  return rep;
}

}  // namespace tame
