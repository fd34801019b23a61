#pragma once

#include <string>
#include <vector>

#include "tame/endo.hpp"

namespace tame {

/// f *_{a,b} g = a*f*g + b*g*f on the free algebra.
struct StarProduct {
  Scalar a;
  Scalar b;
};

Polynomial star(const Polynomial& f, const Polynomial& g, const StarProduct& s);
/// (f*g)*h - f*(g*h).
Polynomial associator(const Polynomial& f, const Polynomial& g, const Polynomial& h, const StarProduct& s);
/// uv - vu.
Polynomial commutator(const Polynomial& u, const Polynomial& v);

/// Reverses every word of every image.
Endo mirror(const Endo& phi);

/// Derivation sending x_g to q and fixing the other generators.
Polynomial apply_derivation(const Polynomial& p, int g, const Polynomial& q);

struct CheckResult {
  std::string id;
  std::string tag;
  bool passed = false;
  /// Identity holds only because its coefficient vanishes in this characteristic.
  bool degenerate = false;
  /// Difference polynomials, empty when the check passes.
  std::vector<Polynomial> residual;
  std::string note;

  std::size_t residual_size() const;
};

struct SuiteReport {
  std::string field;
  int jet = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// Line-oriented form with a versioned header.
  std::string str() const;
};

/// The six free-algebra checks over f at jet orders 4 and n_max.
SuiteReport verify_suite(int n_max, Field f = Field::rationals());

}  // namespace tame
