#include "tame/approx.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace tame {

bool HikingPlan::valid() const {
  if (k.empty() || k.size() != lambda.size()) return false;
  Scalar sum = Scalar::zero(field);
  for (long ki : k) sum += Scalar(field, ki);
  if (!sum.is_one()) return false;
  for (const auto& l : lambda)
    if (l.is_zero()) return false;
  for (int n : exponents) {
    Scalar s = Scalar::zero(field);
    for (std::size_t i = 0; i < k.size(); ++i) s += Scalar(field, k[i]) * lambda[i].pow(n);
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string HikingPlan::str() const {
  std::ostringstream os;
  os << "hiking field=" << field.name() << "\nexponents";
  for (int n : exponents) os << ' ' << n;
  os << "\nk";
  for (long ki : k) os << ' ' << ki;
  os << "\nlambda";
  for (const auto& l : lambda) os << ' ' << l.str();
  os << '\n';
  return os.str();
}

namespace {

std::uint64_t primitive_root(std::uint64_t p) {
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) factors.push_back(m);
  Field f = Field::prime(p);
  for (std::uint64_t g = 2; g < p; ++g) {
    Scalar s(f, static_cast<long>(g));
    bool ok = true;
    for (auto q : factors)
      if (s.pow(static_cast<long>((p - 1) / q)).is_one()) ok = false;
    if (ok) return g;
  }
  return 1;
}

}  // namespace

HikingPlan hiking_solve(std::vector<int> exponents, Field f) {
  for (int n : exponents)
    if (n < 1) throw Error("hiking exponents must be positive");
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  HikingPlan plan;
  plan.field = f;
  plan.exponents = exponents;
  if (exponents.empty()) {
    plan.k = {1};
    plan.lambda = {Scalar::one(f)};
    return plan;
  }
  if (f.is_rational()) {
    // finite differences: sum_s (-1)^(s+1) C(r,s) s^j vanishes for 1 <= j < r
    const int r = exponents.back() + 1;
    mpz_class binom = 1;
    for (int s = 1; s <= r; ++s) {
      binom = binom * (r - s + 1) / s;
      if (!binom.fits_slong_p()) throw Error("hiking exponent too large");
      long c = binom.get_si();
      plan.k.push_back(s % 2 ? c : -c);
      plan.lambda.push_back(Scalar(f, static_cast<long>(s)));
    }
  } else {
    const std::uint64_t p = f.characteristic();
    std::vector<long> residues = {0};
    for (int n : exponents) {
      long e = n % static_cast<long>(p - 1);
      if (e == 0)
        throw Error("exponent " + std::to_string(n) + " is divisible by " + std::to_string(p - 1) +
                    ": its graded part cannot be separated from the constant part over " + f.name());
      residues.push_back(e);
    }
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    const int s = static_cast<int>(residues.size());
    if (static_cast<std::uint64_t>(s) > p - 1) throw Error("field " + f.name() + " too small for this hiking plan");
    Scalar g(f, static_cast<long>(primitive_root(p)));
    Matrix a(s, s, f);
    std::vector<Scalar> rhs(s, Scalar::zero(f));
    rhs[0] = Scalar::one(f);
    for (int i = 0; i < s; ++i) plan.lambda.push_back(g.pow(i));
    for (int r = 0; r < s; ++r)
      for (int i = 0; i < s; ++i) a(r, i) = plan.lambda[i].pow(residues[r]);
    auto sol = a.solve(rhs);
    if (!sol) throw Error("hiking system is singular over " + f.name());
    for (const auto& c : *sol) plan.k.push_back(static_cast<long>(c.residue()));
  }
  if (!plan.valid()) throw Error("internal: hiking plan fails its defining equations");
  return plan;
}

Endo hiking_scale(Variant v, int n, int g, const Scalar& lambda) {
  Matrix a = Matrix::identity(n, lambda.field());
  a(g, g) = lambda;
  return Endo::linear(v, a);
}

Endo hiking_apply(const Endo& phi, const HikingPlan& plan, int g, int N) {
  if (!phi.is_origin_preserving()) throw Error("hiking needs an origin-preserving map");
  if (g < 0 || g >= phi.nvars()) throw Error("scaled generator out of range");
  if (!(phi.field() == plan.field)) throw Error("hiking plan over a different field");
  if (!plan.valid()) throw Error("hiking plan fails its defining equations");
  Endo id = Endo::identity(phi.variant(), phi.nvars(), phi.field());
  auto low = aug_order(phi).order;
  if (!low) return id;
  if (*low >= N) throw Error("jet order " + std::to_string(N) + " too small to observe the lowest correction (degree " +
                             std::to_string(*low) + ")");
  Endo acc = id.truncate(N);
  for (std::size_t i = 0; i < plan.k.size(); ++i) {
    Endo psi = hiking_scale(phi.variant(), phi.nvars(), g, plan.lambda[i]);
    Endo psi_inv = hiking_scale(phi.variant(), phi.nvars(), g, plan.lambda[i].inverse());
    Endo conj = compose_mod(compose_mod(psi_inv, phi, N), psi, N);
    acc = compose_mod(acc, jet_power(conj, static_cast<int>(plan.k[i]), N), N);
  }
  return acc;
}

Polynomial graded_part(const Polynomial& p, int g, int j) {
  Polynomial out(p.variant(), p.nvars(), p.field());
  for (const auto& [m, c] : p.terms())
    if (p.var_degree(m, g) == j) out.add_term(m, c);
  return out;
}

Polynomial verify_inclusion_exclusion(int n, int m, Field f) {
  if (n < 1 || n > 6) throw Error("inclusion-exclusion needs 1 <= n <= 6");
  if (m < 0) throw Error("power must be nonnegative");
  const auto v = Variant::Commutative;
  Polynomial total(v, n, f);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Polynomial s(v, n, f);
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) {
        s += Polynomial::variable(v, n, f, i);
        ++size;
      }
    Polynomial t = s.pow(m);
    total += (n - size) % 2 ? -t : t;
  }
  return total;
}

std::optional<int> tame_residual_order(const Endo& phi, const TameWord& w) {
  if (phi.variant() != w.variant() || phi.nvars() != w.nvars() || !(phi.field() == w.field()))
    throw Error("map and word live in different rings");
  return aug_order(compose(phi, eval_word(word_inverse(w)))).order;
}

std::optional<int> tame_residual_order_mod(const Endo& phi, const TameWord& w, int N) {
  if (phi.variant() != w.variant() || phi.nvars() != w.nvars() || !(phi.field() == w.field()))
    throw Error("map and word live in different rings");
  if (!phi.is_origin_preserving()) return 0;
  return aug_order(compose_mod(phi, eval_word_mod(word_inverse(w), N), N)).order;
}

namespace {

struct Atom {
  std::function<TameWord(const Scalar&)> word;
  std::vector<Polynomial> correction;
};

// Single elementary letter when phi is x_i -> x_i + p (p free of x_i), nothing else moved.
std::optional<TameGen> as_elementary(const Endo& phi) {
  std::optional<TameGen> out;
  for (int i = 0; i < phi.nvars(); ++i) {
    Polynomial d = phi.image(i) - Polynomial::variable(phi.variant(), phi.nvars(), phi.field(), i);
    if (d.is_zero()) continue;
    if (out || d.depends_on(i)) return std::nullopt;
    out = TameGen::elementary(i, d);
  }
  return out;
}

class Approximator {
 public:
  Approximator(Variant v, int n, Field f) : v_(v), n_(n), f_(f) {}

  // Word u with eval(u) = x + target mod I^(d+1), or nullopt.
  std::optional<TameWord> solve(const std::vector<Polynomial>& target, int d) {
    std::vector<Atom> atoms;
    std::vector<std::function<void(std::vector<Atom>&)>> stages = {
        [&](std::vector<Atom>& a) { elementary_atoms(a, d); },
        [&](std::vector<Atom>& a) { conjugate_atoms(a, d, transvections({1})); },
        [&](std::vector<Atom>& a) { commutator_atoms(a, d); },
        [&](std::vector<Atom>& a) { conjugate_atoms(a, d, transvections({-1, 2})); },
        [&](std::vector<Atom>& a) { conjugate_atoms(a, d, double_transvections()); },
    };
    for (auto& stage : stages) {
      stage(atoms);
      if (auto w = combine(atoms, target)) return w;
    }
    return std::nullopt;
  }

 private:
  std::vector<Monomial> free_of(int i, int d) const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(v_, n_, d))
      if (Polynomial::term(v_, n_, m, Scalar::one(f_)).depends_on(i) == false) out.push_back(m);
    return out;
  }

  TameGen elem(int i, const Monomial& m, const Scalar& c) const {
    return TameGen::elementary(i, Polynomial::term(v_, n_, m, c));
  }

  void add(std::vector<Atom>& atoms, std::function<TameWord(const Scalar&)> make, int d) const {
    Endo e = eval_word_mod(make(Scalar::one(f_)), d + 1);
    JetReport rep = aug_order(e);
    if (!rep.order) return;
    if (*rep.order < d) throw Error("internal: approximation atom below its degree");
    if (*rep.order > d) return;
    atoms.push_back({std::move(make), rep.discrepancy});
  }

  void elementary_atoms(std::vector<Atom>& atoms, int d) const {
    for (int i = 0; i < n_; ++i)
      for (const auto& m : free_of(i, d))
        add(atoms, [=, this](const Scalar& c) {
          TameWord w(v_, n_, f_);
          return w.push(elem(i, m, c));
        }, d);
  }

  std::vector<Matrix> transvections(const std::vector<long>& scales) const {
    std::vector<Matrix> out;
    for (long c : scales)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          if (j == k || Scalar(f_, c).is_zero()) continue;
          Matrix a = Matrix::identity(n_, f_);
          a(j, k) = Scalar(f_, c);
          out.push_back(a);
        }
    return out;
  }

  std::vector<Matrix> double_transvections() const {
    std::vector<Matrix> out, single = transvections({1});
    for (const auto& a : single)
      for (const auto& b : single)
        if (!(a == b)) out.push_back(a * b);
    return out;
  }

  void conjugate_atoms(std::vector<Atom>& atoms, int d, const std::vector<Matrix>& mats) const {
    for (const auto& a : mats) {
      TameWord t(v_, n_, f_);
      t.push(TameGen::linear(v_, a));
      for (int i = 0; i < n_; ++i)
        for (const auto& m : free_of(i, d))
          add(atoms, [=, this](const Scalar& c) {
            TameWord w(v_, n_, f_);
            w.push(elem(i, m, c));
            return conjugate(t, w);
          }, d);
    }
  }

  void commutator_atoms(std::vector<Atom>& atoms, int d) const {
    for (int a = 2; a <= d - 1; ++a) {
      const int b = d + 1 - a;
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
          if (i == j) continue;
          for (const auto& m1 : free_of(i, a))
            for (const auto& m2 : free_of(j, b))
              add(atoms, [=, this](const Scalar& c) {
                TameWord w(v_, n_, f_);
                Scalar one = Scalar::one(f_);
                w.push(elem(i, m1, c)).push(elem(j, m2, one)).push(elem(i, m1, c), -1).push(elem(j, m2, one), -1);
                return w;
              }, d);
        }
    }
  }

  std::optional<TameWord> combine(const std::vector<Atom>& atoms, const std::vector<Polynomial>& target) const {
    std::map<std::pair<int, Monomial>, int> slot;
    auto index = [&](int i, const Monomial& m) {
      auto [it, fresh] = slot.emplace(std::make_pair(i, m), static_cast<int>(slot.size()));
      return it->second;
    };
    for (int i = 0; i < n_; ++i)
      for (const auto& [m, c] : target[i].terms()) index(i, m);
    for (const auto& a : atoms)
      for (int i = 0; i < n_; ++i)
        for (const auto& [m, c] : a.correction[i].terms()) index(i, m);
    Matrix mat(static_cast<int>(slot.size()), static_cast<int>(atoms.size()), f_);
    std::vector<Scalar> rhs(slot.size(), Scalar::zero(f_));
    for (std::size_t col = 0; col < atoms.size(); ++col)
      for (int i = 0; i < n_; ++i)
        for (const auto& [m, c] : atoms[col].correction[i].terms()) mat(index(i, m), static_cast<int>(col)) = c;
    for (int i = 0; i < n_; ++i)
      for (const auto& [m, c] : target[i].terms()) rhs[index(i, m)] = c;
    if (atoms.empty()) return std::nullopt;
    auto sol = mat.solve(rhs);
    if (!sol) return std::nullopt;
    TameWord u(v_, n_, f_);
    for (std::size_t col = 0; col < atoms.size(); ++col)
      if (!(*sol)[col].is_zero()) u.append(atoms[col].word((*sol)[col]));
    return u;
  }

  Variant v_;
  int n_;
  Field f_;
};

}  // namespace

ApproxResult greedy_tame_approximate(const Endo& phi, int m) {
  if (!phi.is_origin_preserving()) throw Error("approximation needs an origin-preserving map");
  if (m < 2) throw Error("approximation order must be at least 2");
  const Variant v = phi.variant();
  const int n = phi.nvars();
  const Field f = phi.field();
  Matrix a = phi.linear_part();
  if (a.determinant().is_zero()) throw Error("linear part is singular");

  ApproxResult res{TameWord(v, n, f), false, 0, {}};
  if (auto e = as_elementary(phi)) {
    res.word.push(*e);
  } else {
    if (!(a == Matrix::identity(n, f))) res.word.push(TameGen::linear(v, a));
    Endo rho = compose_mod(phi, eval_word_mod(word_inverse(res.word), m), m);
    Approximator ap(v, n, f);
    for (;;) {
      JetReport rep = aug_order(rho);
      if (!rep.order || *rep.order >= m) break;
      if (auto e = as_elementary(rho)) {
        res.word.push(*e);
        break;
      }
      auto u = ap.solve(rep.discrepancy, *rep.order);
      if (!u) {
        res.obstruction = rep.discrepancy;
        break;
      }
      res.word.append(*u);
      rho = compose_mod(rho, eval_word_mod(word_inverse(*u), m), m);
      auto next = aug_order(rho).order;
      if (next && *next <= *rep.order) throw Error("internal: approximation step did not raise the order");
    }
  }
  auto achieved = tame_residual_order_mod(phi, res.word, m);
  res.achieved = achieved ? *achieved : m;
  res.complete = res.achieved >= m;
  if (!res.complete && res.obstruction.empty())
    res.obstruction = aug_order(compose_mod(phi, eval_word_mod(word_inverse(res.word), m), m)).discrepancy;
  return res;
}

}  // namespace tame
