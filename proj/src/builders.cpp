#include "tame/builders.hpp"

#include <functional>

namespace tame {

namespace {

constexpr int X = 0, Y = 1, Z = 2, T = 3;
constexpr auto C = Variant::Commutative;

// Linear map sending generator i to generator to[i].
Matrix permutation(const std::vector<int>& to, Field f) {
  int n = static_cast<int>(to.size());
  Matrix a(n, n, f);
  for (int i = 0; i < n; ++i) a(i, to[i]) = Scalar::one(f);
  return a;
}

TameWord single(const TameGen& g, int exponent = 1) {
  TameWord w(g.variant(), g.nvars(), g.field());
  w.push(g, exponent);
  return w;
}

TameWord lin(Variant v, const Matrix& a) { return single(TameGen::linear(v, a)); }

TameWord concat(std::initializer_list<TameWord> parts) {
  TameWord w = *parts.begin();
  for (auto it = parts.begin() + 1; it != parts.end(); ++it) w.append(*it);
  return w;
}

Scalar binomial(Field f, int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(f, mpq_class(b));
}

void require_odd_characteristic(Field f) {
  if (f.characteristic() == 2) throw Error("construction needs characteristic != 2");
}

bool enough_points(Field f, int count) { return f.is_rational() || static_cast<std::uint64_t>(count) <= f.size(); }

// Weights w_e over the points 0..deg with sum_e w_e e^r = value * [r == r0]
// for r = 0..deg (exact Vandermonde solve).
std::vector<Scalar> isolate_power(Field f, int deg, int r0, const Scalar& value) {
  Matrix v(deg + 1, deg + 1, f);
  for (int r = 0; r <= deg; ++r)
    for (int e = 0; e <= deg; ++e) v(r, e) = Scalar(f, static_cast<long>(e)).pow(r);
  std::vector<Scalar> rhs(deg + 1, Scalar::zero(f));
  rhs[r0] = value;
  auto w = v.solve(rhs);
  if (!w) throw Error("singular Vandermonde system");
  return *w;
}

const std::vector<int> kSwapYZ = {X, Z, Y};
const std::vector<int> kSwapXY = {Y, X, Z};
// x -> y, y -> z, z -> x; conjugating z -> z + e*x^j by it gives x -> x + e*y^j
const std::vector<int> kRotate = {Y, Z, X};

TameWord empty3(Field f) { return TameWord(C, 3, f); }

}  // namespace

TameGen psi_generator(Variant v, int n, Field f) {
  if (n < 3) throw Error("psi needs at least three generators");
  return TameGen::elementary(Z, Polynomial::variable(v, n, f, X) * Polynomial::variable(v, n, f, Y));
}

TameWord build_phi_m(int m, const Scalar& b) {
  Field f = b.field();
  if (m < 1) throw Error("phi_m needs m >= 1");
  if (b.is_zero()) return empty3(f);
  if (m == 1) {
    Matrix a = Matrix::identity(3, f);
    a(Z, X) = b;
    return lin(C, a);
  }
  // A : y -> y - b*x^(m-1); then psi^-1 A^-1 psi A sends z to z + b*x^m
  TameWord a = conjugate(lin(C, permutation(kSwapYZ, f)), build_phi_m(m - 1, -b));
  TameGen psi = psi_generator(C, 3, f);
  return concat({single(psi, -1), word_inverse(a), single(psi), a});
}

namespace {

TameWord phi_y(int m, const Scalar& b) {
  return conjugate(lin(C, permutation(kSwapXY, b.field())), build_phi_m(m, b));
}

// Sum over the points e of w_e * family(e); every family member is a
// z-elementary map, so the product adds their polynomials.
TameWord combine(const std::vector<Scalar>& w, const std::function<TameWord(int, const Scalar&)>& family) {
  TameWord out = empty3(w.front().field());
  for (int e = 0; e < static_cast<int>(w.size()); ++e)
    if (!w[e].is_zero()) out.append(family(e, w[e]));
  return out;
}

}  // namespace

TameWord build_monomial_xkyl(int k, int l, const Scalar& b) {
  Field f = b.field();
  require_odd_characteristic(f);
  if (k < 0 || l < 0) throw Error("exponents must be nonnegative");
  if (k + l == 0) throw Error("a constant shift is not generated by linear maps and psi");
  if (b.is_zero()) return empty3(f);
  if (l == 0) return build_phi_m(k, b);
  if (k == 0) return phi_y(l, b);
  const int d = k + l;

  // (x + a*y)^d, combined over d + 1 values of a
  if (!binomial(f, d, l).is_zero() && enough_points(f, d + 1)) {
    auto w = isolate_power(f, d, l, b / binomial(f, d, l));
    return combine(w, [&](int a, const Scalar& c) {
      if (a == 0) return build_phi_m(d, c);
      Matrix t = Matrix::identity(3, f);
      t(X, Y) = Scalar(f, static_cast<long>(a));
      return conjugate(lin(C, t), build_phi_m(d, c));
    });
  }
  if (l == 1) return build_alpha_m(k, b);
  if (k == 1) return conjugate(lin(C, permutation(kSwapXY, f)), build_alpha_m(l, b));

  // y*(x + a*y)^m with m = d - 1
  const int m = d - 1;
  if (!binomial(f, m, l - 1).is_zero() && enough_points(f, m + 1)) {
    auto w = isolate_power(f, m, l - 1, b / binomial(f, m, l - 1));
    return combine(w, [&](int a, const Scalar& c) {
      if (a == 0) return build_alpha_m(m, c);
      Matrix t = Matrix::identity(3, f);
      t(X, Y) = Scalar(f, static_cast<long>(a));
      return conjugate(lin(C, t), build_alpha_m(m, c));
    });
  }
  // x*(y + a*x)^m
  if (!binomial(f, m, k - 1).is_zero() && enough_points(f, m + 1)) {
    auto w = isolate_power(f, m, k - 1, b / binomial(f, m, k - 1));
    return combine(w, [&](int a, const Scalar& c) {
      Matrix t(3, 3, f);
      t(X, X) = Scalar(f, static_cast<long>(a));
      t(X, Y) = Scalar::one(f);
      t(Y, X) = Scalar::one(f);
      t(Z, Z) = Scalar::one(f);
      return conjugate(lin(C, t), build_alpha_m(m, c));
    });
  }
  // (x + e*y^j)^a with a - r = k, j*r = l
  for (int r = 1; r <= l; ++r) {
    if (l % r) continue;
    int j = l / r, a = k + r;
    if (binomial(f, a, r).is_zero() || !enough_points(f, a + 1)) continue;
    auto w = isolate_power(f, a, r, b / binomial(f, a, r));
    return combine(w, [&](int e, const Scalar& c) {
      if (e == 0) return build_phi_m(a, c);
      TameWord shear = conjugate(lin(C, permutation(kRotate, f)), build_phi_m(j, Scalar(f, static_cast<long>(e))));
      return conjugate(shear, build_phi_m(a, c));
    });
  }
  // (y + e*x^j)^a with a - r = l, j*r = k
  for (int r = 1; r <= k; ++r) {
    if (k % r) continue;
    int j = k / r, a = l + r;
    if (binomial(f, a, r).is_zero() || !enough_points(f, a + 1)) continue;
    auto w = isolate_power(f, a, r, b / binomial(f, a, r));
    return combine(w, [&](int e, const Scalar& c) {
      if (e == 0) return phi_y(a, c);
      TameWord shear = conjugate(lin(C, permutation(kSwapYZ, f)), build_phi_m(j, Scalar(f, static_cast<long>(e))));
      return conjugate(shear, phi_y(a, c));
    });
  }
  throw Error("no construction of x^" + std::to_string(k) + "*y^" + std::to_string(l) + " over " + f.name());
}

TameWord build_alpha_P(const Polynomial& p) {
  if (p.variant() != C || p.nvars() != 3) throw Error("alpha_P needs a polynomial in K[x,y,z]");
  if (p.depends_on(Z)) throw Error("alpha_P needs a polynomial in x and y only");
  require_odd_characteristic(p.field());
  TameWord w = empty3(p.field());
  for (const auto& [m, c] : p.terms()) w.append(build_monomial_xkyl(static_cast<int>(m[X]), static_cast<int>(m[Y]), c));
  return w;
}

TameWord build_alpha_m(int m, const Scalar& b) {
  Field f = b.field();
  require_odd_characteristic(f);
  if (m < 0) throw Error("alpha_m needs m >= 0");
  if (b.is_zero()) return empty3(f);
  TameGen psi = psi_generator(C, 3, f);
  if (m == 0) {
    Matrix a = Matrix::identity(3, f);
    a(Z, Y) = b;
    return lin(C, a);
  }
  if (m == 1) {
    if (b.is_one()) return single(psi);
    Matrix d = Matrix::identity(3, f);
    d(X, X) = b;
    return conjugate(lin(C, d), single(psi));
  }
  // c : x -> x + y + h*x^m, y -> y + h*x^m with h = b/2, so that c psi c^-1 is
  // z -> z + x*y + y^2 + b*y*x^m + h*x^(m+1) + h^2*x^(2m)
  Scalar h = b / Scalar(f, 2L);
  Matrix shear = Matrix::identity(3, f);
  shear(X, Y) = Scalar::one(f);
  TameWord c = conjugate(lin(C, permutation(kSwapYZ, f)), build_phi_m(m, h));
  c.append(lin(C, shear));
  return concat({conjugate(c, single(psi)), single(psi, -1), phi_y(2, Scalar(f, -1L)), build_phi_m(m + 1, -h),
                 build_phi_m(2 * m, -(h * h))});
}

int height(const Monomial& word, int a, int b) {
  int runs = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (static_cast<int>(word[i]) != a && static_cast<int>(word[i]) != b)
      throw Error("height is defined for words in two letters only");
    if (i == 0 || word[i] != word[i - 1]) ++runs;
  }
  return runs;
}

namespace {

constexpr auto Fr = Variant::Free;

TameWord free_elem(Field f, int g, const Monomial& word, const Scalar& a);

// z -> z + a*W for W a word in x, y starting with x.
TameWord free_canonical(Field f, const Monomial& w, const Scalar& a) {
  TameGen psi = psi_generator(Fr, 4, f);
  if (w.size() == 1) {
    Matrix m = Matrix::identity(4, f);
    m(Z, X) = a;
    return lin(Fr, m);
  }
  if (w == Monomial{X, Y}) {
    if (a.is_one()) return single(psi);
    Matrix d = Matrix::identity(4, f);
    d(X, X) = a;
    return conjugate(lin(Fr, d), single(psi));
  }
  const std::size_t len = w.size();
  if (height(w) == 1) {
    // A : y -> y - a*x^(len-1); psi^-1 A^-1 psi A
    TameWord A = free_elem(f, Y, Monomial(len - 1, X), -a);
    return concat({single(psi, -1), word_inverse(A), single(psi), A});
  }
  if (height(w) == 2 && w[1] == Y) {
    // w = x*y^l: alpha : x -> x + y^l, beta : t -> t + a*z*x, and
    // alpha beta alpha^-1 beta^-1 is t -> t + a*z*y^l
    TameWord alpha = free_elem(f, X, Monomial(len - 1, Y), Scalar::one(f));
    TameWord beta = free_elem(f, T, Monomial{Z, X}, a);
    TameWord gamma = concat({alpha, beta, word_inverse(alpha), word_inverse(beta)});
    return conjugate(lin(Fr, permutation({T, Y, X, Z}, f)), gamma);
  }
  // w = M' r^k: phi : z -> z - a*M', alpha : t -> t + z*r^k, and
  // phi^-1 alpha phi alpha^-1 is t -> t + a*M'*r^k
  std::size_t k = 0;
  while (k < len && w[len - 1 - k] == w.back()) ++k;
  Monomial prefix(w.begin(), w.end() - static_cast<std::ptrdiff_t>(k));
  Monomial tail{static_cast<std::uint32_t>(Z)};
  tail.insert(tail.end(), k, w.back());
  TameWord phi = free_elem(f, Z, prefix, -a);
  TameWord alpha = free_elem(f, T, tail, Scalar::one(f));
  TameWord beta = concat({word_inverse(phi), alpha, phi, word_inverse(alpha)});
  return conjugate(lin(Fr, permutation({X, Y, T, Z}, f)), beta);
}

// g -> g + a*W, W a word in at most two letters other than g.
TameWord free_elem(Field f, int g, const Monomial& word, const Scalar& a) {
  if (a.is_zero()) return TameWord(Fr, 4, f);
  if (word.empty()) throw Error("a constant shift is not generated by linear maps and psi");
  int u = static_cast<int>(word.front()), v = -1;
  for (auto letter : word) {
    if (static_cast<int>(letter) == g) throw Error("elementary word involves its own generator");
    if (static_cast<int>(letter) != u) {
      if (v >= 0 && static_cast<int>(letter) != v) throw Error("word uses more than two letters");
      v = static_cast<int>(letter);
    }
  }
  if (v < 0)
    for (int c = 0; c < 4; ++c)
      if (c != u && c != g) {
        v = c;
        break;
      }
  int rest = 0;
  while (rest == u || rest == v || rest == g) ++rest;
  std::vector<int> to = {u, v, g, rest};
  Monomial canon;
  for (auto letter : word) canon.push_back(static_cast<int>(letter) == u ? X : Y);
  TameWord core = free_canonical(f, canon, a);
  if (to == std::vector<int>{X, Y, Z, T}) return core;
  return conjugate(lin(Fr, permutation(to, f)), core);
}

}  // namespace

TameWord build_freeassoc_monomial(Field f, const Monomial& word, int target, std::optional<Scalar> coef) {
  if (target != Z && target != T) throw Error("target generator must be z or t");
  for (auto letter : word)
    if (letter != X && letter != Y) throw Error("the monomial must be a word in x and y");
  return free_elem(f, target, word, coef.value_or(Scalar::one(f)));
}

std::vector<TameGen> decompose_psi_P(const Polynomial& p, int target) {
  if (target < 0) target = p.nvars() - 1;
  if (p.depends_on(target)) throw Error("P must not involve the target generator");
  std::vector<TameGen> out;
  for (const auto& [m, c] : p.terms())
    out.push_back(TameGen::elementary(target, Polynomial::term(p.variant(), p.nvars(), m, c)));
  return out;
}

}  // namespace tame
