#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tame/tame_word.hpp"

namespace tame {

/// Integer exponents k_i and scales lambda_i with sum k_i = 1 (in the field)
/// and sum_i k_i * lambda_i^n_j = 0 for every target exponent n_j.
struct HikingPlan {
  std::vector<long> k;
  std::vector<Scalar> lambda;
  std::vector<int> exponents;
  Field field;

  /// Checks both defining equations exactly.
  bool valid() const;
  std::string str() const;
};

HikingPlan hiking_solve(std::vector<int> exponents, Field f);

/// psi_lambda : x_g -> lambda * x_g, all other generators fixed.
Endo hiking_scale(Variant v, int n, int g, const Scalar& lambda);

/// prod_i (psi_i^-1 phi psi_i)^k_i modulo I^N, psi_i = hiking_scale(.., g, lambda_i).
/// In the lowest correction of every image other than x_g, the part of
/// x_g-degree j is multiplied by sum_i k_i lambda_i^j.
Endo hiking_apply(const Endo& phi, const HikingPlan& plan, int g, int N);

/// Part of x_g-degree j of p.
Polynomial graded_part(const Polynomial& p, int g, int j);

/// sum over nonempty S of (-1)^(n-|S|) (sum_{i in S} x_i)^m in K[x_1..x_n].
Polynomial verify_inclusion_exclusion(int n, int m, Field f = Field::rationals());

/// aug_order of phi composed with the inverse of eval(w); nullopt is infinity.
std::optional<int> tame_residual_order(const Endo& phi, const TameWord& w);
/// Same computation modulo I^N: exact below N, nullopt when the residual is
/// the identity modulo I^N.
std::optional<int> tame_residual_order_mod(const Endo& phi, const TameWord& w, int N);

struct ApproxResult {
  TameWord word;
  /// Requested order reached (verified independently).
  bool complete = false;
  /// Residual is the identity modulo I^achieved.
  int achieved = 0;
  /// Lowest homogeneous discrepancy left, per generator, when partial.
  std::vector<Polynomial> obstruction;
};

/// Best-effort word w with tame_residual_order(phi, w) >= m.
ApproxResult greedy_tame_approximate(const Endo& phi, int m);

}  // namespace tame
