#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tame/endo.hpp"

namespace tame {

/// Diagonal action x_i -> lambda_i x_i.
struct TorusElement {
  std::vector<Scalar> lambda;

  Endo endo(Variant v) const;
  TorusElement inverse() const;
};

/// Integer weight vectors of a rank-r torus action, one per generator.
struct WeightAction {
  int rank = 0;
  std::vector<std::vector<long>> weights;

  /// Standard action of the rank-n torus: x_i has weight e_i.
  static WeightAction standard(int n);
  /// Parses "[[2],[1],[1]]".
  static WeightAction parse(const std::string& text);
  std::vector<long> weight(Variant v, const Monomial& m) const;
};

/// Coefficient of x^J in image i multiplied by alpha_i * beta^J.
Endo torus_conjugate(const TorusElement& alpha, const Endo& phi, const TorusElement& beta);

/// Monomials of degree <= D whose weight equals the weight of x_i.
std::vector<Monomial> centralizer_support(const WeightAction& action, int i, int D,
                                          Variant v = Variant::Commutative);

bool commutes_with(const Endo& phi, const TorusElement& alpha);
/// Support criterion: every monomial of image i has the weight of x_i.
bool commutes_with(const Endo& phi, const WeightAction& action);

/// Exponents a_i (alpha_i = b^a_i) solving the cyclic system
/// beta_i * alpha_{i+1}^-1 * alpha_{i+2}^-1 * alpha_i = 1 with beta_i = b^e_i.
struct TorusNormalization {
  bool solvable = false;
  std::vector<long> exponents;
  std::string reason;
};
TorusNormalization solve_torus_normalization(const std::vector<long>& beta_exponents);

/// psi_i : x_i -> x_i + beta_i x_{i+1} x_{i+2} (indices cyclic), n >= 3.
Endo cyclic_quadratic(int i, const Scalar& beta, int n);

/// Curve weights k_1..k_n, all >= 1.
struct WeightVector {
  std::vector<long> k;
  /// k_max / k_min.
  mpq_class order() const;
};

/// min over images i and monomials J of (k.J - k_i).
long curve_min_exponent(const Endo& phi, const WeightVector& k);
bool is_singular(const Endo& phi, const WeightVector& k);
/// First k in {1..kmax}^n with order <= N making the curve singular.
std::optional<WeightVector> singular_weight(const Endo& phi, int N, int kmax = 6);

}  // namespace tame
