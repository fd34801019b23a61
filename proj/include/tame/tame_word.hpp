#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tame/endo.hpp"

namespace tame {

/// Linear(A) or Elementary(i, P) with P free of x_i.
class TameGen {
 public:
  enum class Kind { Linear, Elementary };

  static TameGen linear(Variant v, const Matrix& a);
  static TameGen elementary(int i, const Polynomial& p);

  Kind kind() const { return kind_; }
  Variant variant() const { return variant_; }
  int nvars() const { return n_; }
  Field field() const { return field_; }
  const Matrix& matrix() const { return a_; }
  int index() const { return index_; }
  const Polynomial& poly() const { return p_; }

  Endo endo() const;
  /// Exact inverse: A^-1, or Elementary(i, -P).
  TameGen inverse() const;

  friend bool operator==(const TameGen& a, const TameGen& b);

 private:
  TameGen(Kind k, Variant v, int n, Field f) : kind_(k), variant_(v), n_(n), field_(f) {}

  Kind kind_;
  Variant variant_;
  int n_;
  Field field_;
  Matrix a_;
  int index_ = 0;
  Polynomial p_;
};

struct Letter {
  TameGen gen;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.exponent == b.exponent && a.gen == b.gen;
  }
};

class TameWord {
 public:
  TameWord(Variant v, int n, Field f) : variant_(v), n_(n), field_(f) {}

  Variant variant() const { return variant_; }
  int nvars() const { return n_; }
  Field field() const { return field_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  TameWord& push(const TameGen& g, int exponent = 1);
  TameWord& append(const TameWord& w);

  friend bool operator==(const TameWord& a, const TameWord& b) {
    return a.variant_ == b.variant_ && a.n_ == b.n_ && a.field_ == b.field_ && a.letters_ == b.letters_;
  }

  /// File form: header line plus one letter per line.
  std::string str() const;

 private:
  Variant variant_;
  int n_;
  Field field_;
  std::vector<Letter> letters_;
};

/// Juxtaposition g1 g2 ... gk evaluated as the algebra map g1∘g2∘…∘gk.
Endo eval_word(const TameWord& w);
/// eval_word modulo I^N with truncated intermediates.
Endo eval_word_mod(const TameWord& w, int N);
TameWord word_inverse(const TameWord& w);
/// [t, w, t^-1], i.e. t∘eval(w)∘t^-1.
TameWord conjugate(const TameWord& t, const TameWord& w);

TameWord parse_word(std::string_view text);

}  // namespace tame
