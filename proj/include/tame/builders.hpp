#pragma once

#include <optional>
#include <vector>

#include "tame/tame_word.hpp"

namespace tame {

// Builders for K[x,y,z] (n = 3, commutative). Every word uses only linear
// letters and psi : z -> z + x*y (and its inverse).

/// The letter psi : z -> z + x*y in the given ring.
TameGen psi_generator(Variant v, int n, Field f);

/// z -> z + b*x^m.
TameWord build_phi_m(int m, const Scalar& b);
/// z -> z + b*x^k*y^l; characteristic 2 rejected.
TameWord build_monomial_xkyl(int k, int l, const Scalar& b);
/// z -> z + P(x, y); P must live in the n = 3 commutative ring and be free of z.
TameWord build_alpha_P(const Polynomial& p);
/// z -> z + b*y*x^m.
TameWord build_alpha_m(int m, const Scalar& b);

/// Number of maximal single-letter runs of a word in the letters a, b.
int height(const Monomial& word, int a = 0, int b = 1);

/// In K<x,y,z,t>: target -> target + coef*M for a word M in x, y; uses only
/// linear letters and z -> z + x*y.
TameWord build_freeassoc_monomial(Field f, const Monomial& word, int target = 2,
                                  std::optional<Scalar> coef = std::nullopt);

/// One Elementary(target, c*m) per term of p.
std::vector<TameGen> decompose_psi_P(const Polynomial& p, int target = -1);

}  // namespace tame
