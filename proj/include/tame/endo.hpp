#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tame/linalg.hpp"
#include "tame/polynomial.hpp"

namespace tame {

/// Algebra endomorphism x_i -> images[i].
class Endo {
 public:
  Endo() = default;
  explicit Endo(std::vector<Polynomial> images);

  static Endo identity(Variant v, int n, Field f);
  /// Row i of `a` holds the coefficients of the image of x_i.
  static Endo linear(Variant v, const Matrix& a);
  /// x_i -> x_i + p, everything else fixed.
  static Endo elementary(int i, const Polynomial& p);

  Variant variant() const { return images_.front().variant(); }
  int nvars() const { return static_cast<int>(images_.size()); }
  Field field() const { return images_.front().field(); }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(int i) const { return images_.at(i); }

  bool is_origin_preserving() const;
  bool is_identity() const;
  /// Degree-1 coefficient matrix, row i = image of x_i.
  Matrix linear_part() const;
  Endo truncate(int N) const;
  /// Largest image degree.
  int degree() const;

  friend bool operator==(const Endo& a, const Endo& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Endo& a, const Endo& b) { return !(a == b); }

  void check_compatible(const Endo& o) const;

  /// File form: header line plus one `g -> image` line per generator.
  std::string str() const;

 private:
  std::vector<Polynomial> images_;
};

/// "phi first, then psi": image i = substitute(phi.images[i], psi.images).
Endo compose(const Endo& phi, const Endo& psi);
/// truncate(compose(phi, psi), N), truncating intermediates when psi fixes the origin.
Endo compose_mod(const Endo& phi, const Endo& psi, int N);
/// Formal inverse modulo I^N.
Endo jet_inverse(const Endo& phi, int N);
/// phi^k modulo I^N, negative k through jet_inverse.
Endo jet_power(const Endo& phi, int k, int N);

struct JetReport {
  /// nullopt means infinity (identity).
  std::optional<int> order;
  /// Lowest-degree part of image_i - x_i, per generator.
  std::vector<Polynomial> discrepancy;
};

JetReport aug_order(const Endo& phi);
bool is_homothety_mod(const Endo& phi, int N);
bool preserves_ideal_power(const Endo& phi, int N);

std::vector<std::vector<Polynomial>> jacobian(const Endo& phi);
Polynomial jacobian_det(const Endo& phi);
/// Determinant of a square polynomial matrix by memoized cofactor expansion.
Polynomial polynomial_det(const std::vector<std::vector<Polynomial>>& m);

Endo abelianize_endo(const Endo& phi);

Endo nagata(Field f = Field::rationals());
Endo nagata_inverse(Field f = Field::rationals());

/// Parses the header `endo <comm|free> n=<n> field=<F>`; returns (variant, n, field).
struct RingHeader {
  Variant variant;
  int n;
  Field field;
};
RingHeader parse_ring_header(std::string_view line, std::string_view keyword, int line_no = 1);
std::string ring_header(std::string_view keyword, Variant v, int n, Field f);

Endo parse_endo(std::string_view text);

}  // namespace tame
