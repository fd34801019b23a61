#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace tame {

/// Raised for every contract violation in the library (ring mismatch,
/// singular input, malformed text, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field descriptor: Q (characteristic 0) or F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);
  /// Accepts "Q", "F5", "F_5", "Fp" is not accepted (p must be explicit).
  static Field parse(std::string_view text);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  /// Number of elements, 0 standing for infinite.
  std::uint64_t size() const { return p_; }
  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

 private:
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t p);

/// Exact element of a Field.
class Scalar {
 public:
  /// Zero of Q.
  Scalar() : value_(mpq_class(0)) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  /// Parses an integer or `a/b` literal into the field.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Sign of the printed representative (residues printed symmetrically).
  bool is_negative() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  /// Integer power; negative exponents invert.
  Scalar pow(long e) const;
  Scalar abs() const { return is_negative() ? -*this : *this; }

  /// Rational value (Q) or the symmetric representative of the residue.
  mpq_class to_rational() const;
  /// Residue in [0, p); only valid for prime fields.
  std::uint64_t residue() const;

  /// "3/2", "-1", residues printed in (-p/2, p/2].
  std::string str() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace tame
