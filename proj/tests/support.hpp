#pragma once

#include <random>

#include "tame/endo.hpp"
#include "tame/polynomial.hpp"
#include "tame/sample.hpp"
#include "tame/tame_word.hpp"

namespace tame::fixtures {

inline Polynomial P(const char* s, int n = 3, Variant v = Variant::Commutative,
                    Field f = Field::rationals()) {
  return parse_polynomial(s, v, n, f);
}

inline Polynomial F(const char* s, int n = 3, Field f = Field::rationals()) {
  return parse_polynomial(s, Variant::Free, n, f);
}

using tame::random_poly;
using tame::random_tame_word;

}  // namespace tame::fixtures
