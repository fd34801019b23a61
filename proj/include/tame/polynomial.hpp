#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tame/field.hpp"

namespace tame {

enum class Variant { Commutative, Free };

std::string variant_name(Variant v);  // "comm" / "free"
Variant parse_variant(std::string_view s);

/// Commutative: exponent vector of length n. Free: word of 0-based letters.
using Monomial = std::vector<std::uint32_t>;

int monomial_degree(Variant v, const Monomial& m);
void for_each_monomial(Variant v, int n, int degree, const std::function<void(const Monomial&)>& f);
/// Sorted ascending.
std::vector<Monomial> monomials_of_degree(Variant v, int n, int degree);

/// Degree first; within a degree commutative monomials compare exponents
/// from the last generator down, free words compare lexicographically.
struct MonomialLess {
  Variant variant = Variant::Commutative;
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialLess>;

  Polynomial() : Polynomial(Variant::Commutative, 1, Field::rationals()) {}
  Polynomial(Variant v, int n, Field f);

  static Polynomial constant(Variant v, int n, const Scalar& c);
  static Polynomial variable(Variant v, int n, Field f, int i);  // i is 0-based
  static Polynomial term(Variant v, int n, const Monomial& m, const Scalar& c);

  Variant variant() const { return variant_; }
  int nvars() const { return n_; }
  Field field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;
  /// Adds c to the coefficient of m, pruning zeros.
  void add_term(const Monomial& m, const Scalar& c);

  /// -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree carrying a nonzero term; nullopt for zero.
  std::optional<int> low_degree() const;
  Polynomial homogeneous_part(int d) const;
  /// Drops every monomial of total degree >= N.
  Polynomial truncate(int N) const;
  /// True if some monomial involves generator i.
  bool depends_on(int i) const;
  /// Degree in generator i of monomial m.
  int var_degree(const Monomial& m, int i) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.mul(b); }
  Polynomial& operator*=(const Polynomial& o) { return *this = mul(o); }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial scaled(const Scalar& c) const;
  /// Product; with N > 0 terms of degree >= N are never formed.
  Polynomial mul(const Polynomial& o, int N = 0) const;
  Polynomial pow(int k, int N = 0) const;

  /// Algebra-homomorphism extension of x_i -> images[i]. N > 0 truncates.
  Polynomial substitute(const std::vector<Polynomial>& images, int N = 0) const;

  /// d/dx_i; commutative only.
  Polynomial derivative(int i) const;
  /// Free -> commutative projection.
  Polynomial abelianize() const;
  /// Reverses every word (free only).
  Polynomial reversed() const;

  /// Canonical text form, e.g. "x^2 + 2*x*y + y^2".
  std::string str() const;

  void check_compatible(const Polynomial& o) const;

 private:
  Variant variant_;
  int n_;
  Field field_;
  TermMap terms_;
};

/// Generator name used by the printer: x,y,z,t when n <= 4, else x1..xn.
std::string generator_name(int n, int i);

/// Error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses `text` in the polynomial grammar. `line` only labels errors.
Polynomial parse_polynomial(std::string_view text, Variant v, int n, Field f, int line = 1,
                            int column_offset = 0);

/// Generator index (0-based) for a name like "y" or "x3"; nullopt if unknown.
std::optional<int> parse_generator(std::string_view name, int n);

}  // namespace tame
