#include "tame/torus.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

#include "tame/linalg.hpp"

namespace tame {

Endo TorusElement::endo(Variant v) const {
  int n = static_cast<int>(lambda.size());
  if (n == 0) throw Error("empty torus element");
  Field f = lambda.front().field();
  Matrix a(n, n, f);
  for (int i = 0; i < n; ++i) {
    if (lambda[i].is_zero()) throw Error("torus entries must be nonzero");
    a(i, i) = lambda[i];
  }
  return Endo::linear(v, a);
}

TorusElement TorusElement::inverse() const {
  TorusElement r;
  for (const auto& l : lambda) r.lambda.push_back(l.inverse());
  return r;
}

WeightAction WeightAction::standard(int n) {
  WeightAction a;
  a.rank = n;
  for (int i = 0; i < n; ++i) {
    std::vector<long> w(n, 0);
    w[i] = 1;
    a.weights.push_back(w);
  }
  return a;
}

WeightAction WeightAction::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("weights: " + std::string(e.what()), 1, static_cast<int>(e.byte));
  }
  if (!j.is_array() || j.empty()) throw ParseError("weights must be a nonempty list of lists", 1, 1);
  WeightAction a;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("each weight must be a list of integers", 1, 1);
    std::vector<long> w;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("weights must be integers", 1, 1);
      w.push_back(v.get<long>());
    }
    if (a.weights.empty()) a.rank = static_cast<int>(w.size());
    else if (static_cast<int>(w.size()) != a.rank) throw ParseError("all weights need the same rank", 1, 1);
    a.weights.push_back(std::move(w));
  }
  return a;
}

std::vector<long> WeightAction::weight(Variant v, const Monomial& m) const {
  std::vector<long> w(rank, 0);
  auto add = [&](std::size_t g, long times) {
    for (int r = 0; r < rank; ++r) w[r] += times * weights.at(g)[r];
  };
  if (v == Variant::Commutative) {
    for (std::size_t g = 0; g < m.size(); ++g)
      if (m[g]) add(g, static_cast<long>(m[g]));
  } else {
    for (auto g : m) add(g, 1);
  }
  return w;
}

Endo torus_conjugate(const TorusElement& alpha, const Endo& phi, const TorusElement& beta) {
  const int n = phi.nvars();
  if (static_cast<int>(alpha.lambda.size()) != n || static_cast<int>(beta.lambda.size()) != n)
    throw Error("torus elements must have one entry per generator");
  for (const auto* t : {&alpha, &beta})
    for (const auto& l : t->lambda)
      if (l.is_zero()) throw Error("torus entries must be nonzero");
  std::vector<Polynomial> ims;
  for (int i = 0; i < n; ++i) {
    Polynomial p(phi.variant(), n, phi.field());
    for (const auto& [m, c] : phi.image(i).terms()) {
      Scalar s = alpha.lambda[i] * c;
      if (phi.variant() == Variant::Commutative) {
        for (int g = 0; g < n; ++g) s *= beta.lambda[g].pow(static_cast<long>(m[g]));
      } else {
        for (auto g : m) s *= beta.lambda[g];
      }
      p.add_term(m, s);
    }
    ims.push_back(std::move(p));
  }
  return Endo(std::move(ims));
}

std::vector<Monomial> centralizer_support(const WeightAction& action, int i, int D, Variant v) {
  const int n = static_cast<int>(action.weights.size());
  if (D < 1) throw Error("degree bound must be at least 1");
  if (i < 0 || i >= n) throw Error("coordinate out of range");
  Monomial unit_i;
  if (v == Variant::Commutative) {
    unit_i.assign(n, 0);
    unit_i[i] = 1;
  } else {
    unit_i.push_back(static_cast<std::uint32_t>(i));
  }
  const auto target = action.weight(v, unit_i);
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec;
  if (v == Variant::Commutative) {
    m.assign(n, 0);
    rec = [&](int g, int left) {
      if (g == n) {
        if (action.weight(v, m) == target) out.push_back(m);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        m[g] = static_cast<std::uint32_t>(e);
        rec(g + 1, left - e);
      }
      m[g] = 0;
    };
    rec(0, D);
  } else {
    rec = [&](int, int left) {
      if (action.weight(v, m) == target) out.push_back(m);
      if (left == 0) return;
      for (int g = 0; g < n; ++g) {
        m.push_back(static_cast<std::uint32_t>(g));
        rec(0, left - 1);
        m.pop_back();
      }
    };
    rec(0, D);
  }
  std::sort(out.begin(), out.end(), MonomialLess{v});
  return out;
}

bool commutes_with(const Endo& phi, const TorusElement& alpha) {
  Endo a = alpha.endo(phi.variant());
  return compose(a, phi) == compose(phi, a);
}

bool commutes_with(const Endo& phi, const WeightAction& action) {
  if (static_cast<int>(action.weights.size()) != phi.nvars())
    throw Error("weight action must have one weight per generator");
  for (int i = 0; i < phi.nvars(); ++i) {
    Monomial unit_i;
    if (phi.variant() == Variant::Commutative) {
      unit_i.assign(phi.nvars(), 0);
      unit_i[i] = 1;
    } else {
      unit_i.push_back(static_cast<std::uint32_t>(i));
    }
    auto target = action.weight(phi.variant(), unit_i);
    for (const auto& [m, c] : phi.image(i).terms())
      if (action.weight(phi.variant(), m) != target) return false;
  }
  return true;
}

TorusNormalization solve_torus_normalization(const std::vector<long>& e) {
  const int n = static_cast<int>(e.size());
  if (n < 3) throw Error("torus normalization needs n >= 3");
  Field q = Field::rationals();
  // a_i - a_{i+1} - a_{i+2} = -e_i, indices mod n
  Matrix a(n, n, q);
  std::vector<Scalar> rhs;
  for (int i = 0; i < n; ++i) {
    a(i, i) += Scalar::one(q);
    a(i, (i + 1) % n) -= Scalar::one(q);
    a(i, (i + 2) % n) -= Scalar::one(q);
    rhs.push_back(Scalar(q, -e[i]));
  }
  TorusNormalization out;
  if (a.determinant().is_zero()) {
    out.reason = "exponent system is singular";
    return out;
  }
  auto sol = a.solve(rhs);
  for (int i = 0; i < n; ++i) {
    mpq_class v = (*sol)[i].to_rational();
    if (v.get_den() != 1) {
      out.reason = "exponent of alpha_" + std::to_string(i + 1) + " would be " + v.get_str() +
                   ", not an integer power of the base";
      out.exponents.clear();
      return out;
    }
    out.exponents.push_back(v.get_num().get_si());
  }
  out.solvable = true;
  return out;
}

Endo cyclic_quadratic(int i, const Scalar& beta, int n) {
  if (n < 3) throw Error("cyclic quadratic maps need n >= 3");
  Field f = beta.field();
  const auto v = Variant::Commutative;
  Polynomial p = Polynomial::variable(v, n, f, (i + 1) % n) * Polynomial::variable(v, n, f, (i + 2) % n);
  return Endo::elementary(i, p.scaled(beta));
}

mpq_class WeightVector::order() const {
  if (k.empty()) throw Error("empty weight vector");
  auto [lo, hi] = std::minmax_element(k.begin(), k.end());
  mpq_class r(*hi, *lo);
  r.canonicalize();
  return r;
}

long curve_min_exponent(const Endo& phi, const WeightVector& k) {
  if (!phi.is_origin_preserving()) throw Error("curve analysis needs an origin-preserving map");
  if (static_cast<int>(k.k.size()) != phi.nvars()) throw Error("one weight per generator required");
  for (long w : k.k)
    if (w < 1) throw Error("curve weights must be positive");
  std::optional<long> best;
  for (int i = 0; i < phi.nvars(); ++i)
    for (const auto& [m, c] : phi.image(i).terms()) {
      long s = -k.k[i];
      if (phi.variant() == Variant::Commutative) {
        for (int g = 0; g < phi.nvars(); ++g) s += k.k[g] * static_cast<long>(m[g]);
      } else {
        for (auto g : m) s += k.k[g];
      }
      if (!best || s < *best) best = s;
    }
  return best.value_or(0);
}

bool is_singular(const Endo& phi, const WeightVector& k) { return curve_min_exponent(phi, k) < 0; }

std::optional<WeightVector> singular_weight(const Endo& phi, int N, int kmax) {
  const int n = phi.nvars();
  WeightVector w{std::vector<long>(n, 1)};
  for (;;) {
    if (w.order() <= N && is_singular(phi, w)) return w;
    int g = n - 1;
    while (g >= 0 && w.k[g] == kmax) w.k[g--] = 1;
    if (g < 0) return std::nullopt;
    ++w.k[g];
  }
}

}  // namespace tame
