#pragma once

#include <random>
#include <vector>

#include "tame/tame_word.hpp"

namespace tame {

// Random polynomial with terms of degree in [lo, hi] and small integer coefficients.
inline Polynomial random_poly(std::mt19937& rng, Variant v, int n, Field f, int lo, int hi,
                              int terms, const std::vector<int>& allowed = {}) {
  std::uniform_int_distribution<int> deg(lo, hi), coef(-3, 3);
  std::vector<int> vars = allowed;
  if (vars.empty())
    for (int i = 0; i < n; ++i) vars.push_back(i);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  Polynomial p(v, n, f);
  for (int t = 0; t < terms; ++t) {
    int d = deg(rng);
    Monomial m;
    if (v == Variant::Commutative) m.assign(n, 0);
    for (int k = 0; k < d; ++k) {
      int g = vars[pick(rng)];
      if (v == Variant::Commutative) ++m[g];
      else m.push_back(static_cast<std::uint32_t>(g));
    }
    p.add_term(m, Scalar(f, static_cast<long>(coef(rng))));
  }
  return p;
}

// Invertible linear letter followed by `elems` elementary letters of degree in [2, maxdeg].
inline TameWord random_tame_word(std::mt19937& rng, Variant v, int n, Field f, int maxdeg, int elems) {
  std::uniform_int_distribution<int> gen(0, n - 1), small(-2, 2);
  Matrix a = Matrix::identity(n, f);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = Scalar(f, static_cast<long>(small(rng)));
  a(n - 1, 0) = Scalar(f, 1L);
  if (a.determinant().is_zero()) a(n - 1, 0) = Scalar::zero(f);
  TameWord w(v, n, f);
  w.push(TameGen::linear(v, a));
  for (int e = 0; e < elems; ++e) {
    int i = gen(rng);
    std::vector<int> others;
    for (int j = 0; j < n; ++j)
      if (j != i) others.push_back(j);
    Polynomial p = random_poly(rng, v, n, f, 2, maxdeg, 2, others);
    if (p.is_zero()) continue;
    w.push(TameGen::elementary(i, p), rng() % 2 ? 1 : -1);
  }
  return w;
}

}  // namespace tame
