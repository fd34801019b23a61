#include <gtest/gtest.h>

#include "support.hpp"
#include "tame/builders.hpp"

using namespace tame;
using tame::fixtures::F;
using tame::fixtures::P;

namespace {

const Field Q = Field::rationals();

Endo z_shift(const Polynomial& p) { return Endo::elementary(2, p); }

// Only linear letters and psi : z -> z + x*y may appear.
bool uses_only_linear_and_psi(const TameWord& w) {
  TameGen psi = psi_generator(w.variant(), w.nvars(), w.field());
  for (const auto& l : w.letters())
    if (l.gen.kind() != TameGen::Kind::Linear && !(l.gen == psi)) return false;
  return true;
}

TEST(EvalWord, Basics) {
  TameWord w(Variant::Commutative, 3, Q);
  EXPECT_TRUE(eval_word(w).is_identity());
  TameGen g = TameGen::elementary(0, P("y^2 - 3*z"));
  w.push(g).push(g, -1);
  EXPECT_TRUE(eval_word(w).is_identity());
  EXPECT_THROW(TameGen::elementary(0, P("x*y")), Error);
  Matrix sing(3, 3, Q);
  EXPECT_THROW(TameGen::linear(Variant::Commutative, sing), Error);
}

TEST(EvalWord, CommutatorFormula) {
  for (int k = 2; k <= 3; ++k)
    for (int m = 2; m <= 3; ++m) {
      auto psi1 = TameGen::elementary(0, P("y").pow(k)), psi2 = TameGen::elementary(1, P("x").pow(m));
      TameWord w(Variant::Commutative, 3, Q);
      w.push(psi1, -1).push(psi2, -1).push(psi1).push(psi2);
      Polynomial x = P("x"), y = P("y");
      Polynomial expect = x - y.pow(k) + (y - (x - y.pow(k)).pow(m)).pow(k);
      EXPECT_EQ(eval_word(w).image(0), expect);
      EXPECT_EQ(eval_word_mod(w, 7), eval_word(w).truncate(7));
    }
}

TEST(WordInverse, Examples) {
  TameWord w(Variant::Commutative, 3, Q);
  w.push(TameGen::elementary(2, P("x*y")));
  TameWord inv = word_inverse(w);
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_EQ(inv.letters()[0].exponent, -1);
  EXPECT_EQ(eval_word(inv), Endo::elementary(2, P("-x*y")));
  EXPECT_EQ(word_inverse(word_inverse(w)), w);

  std::mt19937 rng(3);
  TameWord r(Variant::Free, 3, Q);
  for (int i = 0; i < 6; ++i) {
    if (i % 3 == 2) {
      Matrix a = Matrix::identity(3, Q);
      a(0, 1) = Scalar(Q, static_cast<long>(i));
      a(2, 2) = Scalar(Q, -2L);
      r.push(TameGen::linear(Variant::Free, a), i % 2 ? -1 : 1);
    } else {
      int g = i % 3;
      std::vector<int> others;
      for (int j = 0; j < 3; ++j)
        if (j != g) others.push_back(j);
      r.push(TameGen::elementary(g, fixtures::random_poly(rng, Variant::Free, 3, Q, 1, 2, 2, others)), i % 2 ? -1 : 1);
    }
  }
  TameWord both = r;
  both.append(word_inverse(r));
  EXPECT_TRUE(eval_word(both).is_identity());
}

TEST(BuildPhiM, Targets) {
  std::vector<Scalar> bs = {Scalar(Q, 1L), Scalar(Q, -1L), Scalar(Q, 2L), Scalar::parse(Q, "-3/2"), Scalar(Q, 7L)};
  for (int m = 1; m <= 6; ++m)
    for (const auto& b : bs) {
      TameWord w = build_phi_m(m, b);
      EXPECT_TRUE(uses_only_linear_and_psi(w));
      EXPECT_EQ(eval_word(w), z_shift(P("x").pow(m).scaled(b))) << m << " " << b.str();
    }
  EXPECT_EQ(build_phi_m(1, Scalar(Q, 3L)).size(), 1u);
  EXPECT_EQ(build_phi_m(1, Scalar(Q, 3L)).letters()[0].gen.kind(), TameGen::Kind::Linear);
}

TEST(BuildMonomial, AllSmallDegrees) {
  for (Field f : {Q, Field::prime(5), Field::prime(7)})
    for (int d = 1; d <= 6; ++d)
      for (int k = 0; k <= d; ++k) {
        int l = d - k;
        Scalar b(f, 3L);
        TameWord w = build_monomial_xkyl(k, l, b);
        EXPECT_TRUE(uses_only_linear_and_psi(w));
        Polynomial target = (P("x", 3, Variant::Commutative, f).pow(k) * P("y", 3, Variant::Commutative, f).pow(l)).scaled(b);
        EXPECT_EQ(eval_word(w), z_shift(target)) << f.name() << " x^" << k << " y^" << l;
      }
}

TEST(BuildMonomial, Errors) {
  EXPECT_THROW(build_monomial_xkyl(1, 1, Scalar(Field::prime(2), 1L)), Error);
  EXPECT_THROW(build_monomial_xkyl(0, 0, Scalar(Q, 1L)), Error);
  // (x + a*y)^4 and y*(x + a*y)^3 both miss x^2*y^2 in characteristic 3, and so
  // does every substitution (x + e*y)^a with few enough points
  EXPECT_THROW(build_monomial_xkyl(2, 2, Scalar(Field::prime(3), 1L)), Error);
}

TEST(BuildAlphaP, Targets) {
  EXPECT_TRUE(build_alpha_P(P("0")).empty());
  EXPECT_EQ(eval_word(build_alpha_P(P("x^3 + x*y"))), z_shift(P("x^3 + x*y")));
  Field f7 = Field::prime(7);
  Polynomial p7 = P("x^2*y - 2*y^3", 3, Variant::Commutative, f7);
  EXPECT_EQ(eval_word(build_alpha_P(p7)), z_shift(p7));
  EXPECT_THROW(build_alpha_P(P("x*z")), Error);
  EXPECT_THROW(build_alpha_P(P("1 + x")), Error);
}

TEST(BuildAlphaM, Targets) {
  EXPECT_EQ(eval_word(build_alpha_m(1, Scalar(Q, 1L))), z_shift(P("x*y")));
  EXPECT_EQ(build_alpha_m(1, Scalar(Q, 1L)).size(), 1u);
  EXPECT_EQ(eval_word(build_alpha_m(2, Scalar(Q, 1L))), z_shift(P("y*x^2")));
  Field f7 = Field::prime(7);
  EXPECT_EQ(eval_word(build_alpha_m(3, Scalar(f7, 5L))), z_shift(P("5*y*x^3", 3, Variant::Commutative, f7)));
  for (int m = 0; m <= 5; ++m) {
    TameWord w = build_alpha_m(m, Scalar::parse(Q, "-2/3"));
    EXPECT_TRUE(uses_only_linear_and_psi(w));
    EXPECT_EQ(eval_word(w), z_shift((P("y") * P("x").pow(m)).scaled(Scalar::parse(Q, "-2/3"))));
  }
  EXPECT_THROW(build_alpha_m(2, Scalar(Field::prime(2), 1L)), Error);
}

TEST(Height, Examples) {
  EXPECT_EQ(height({0, 0, 0}), 1);
  EXPECT_EQ(height({0, 0, 1, 1, 1, 1, 1}), 2);
  EXPECT_EQ(height({0, 1, 0}), 3);
  EXPECT_EQ(height({}), 0);
  EXPECT_THROW(height({0, 2}), Error);
}

TEST(BuildFreeAssoc, Examples) {
  Endo id = Endo::identity(Variant::Free, 4, Q);
  TameWord xy = build_freeassoc_monomial(Q, {0, 1});
  ASSERT_EQ(xy.size(), 1u);
  EXPECT_EQ(xy.letters()[0].gen.kind(), TameGen::Kind::Elementary);
  EXPECT_EQ(eval_word(build_freeassoc_monomial(Q, {1, 0, 0})), Endo::elementary(2, F("y*x^2", 4)));
  EXPECT_EQ(eval_word(build_freeassoc_monomial(Q, {0, 1, 0})), Endo::elementary(2, F("x*y*x", 4)));
  EXPECT_EQ(eval_word(build_freeassoc_monomial(Q, {0, 1, 1}, 3, Scalar(Q, -5L))), Endo::elementary(3, F("-5*x*y^2", 4)));
  EXPECT_THROW(build_freeassoc_monomial(Q, {0, 2}), Error);
}

TEST(BuildFreeAssoc, AllShortWords) {
  for (Field f : {Q, Field::prime(5)})
    for (int len = 1; len <= 5; ++len)
      for (int bits = 0; bits < (1 << len); ++bits) {
        Monomial m;
        for (int i = 0; i < len; ++i) m.push_back((bits >> (len - 1 - i)) & 1);
        TameWord w = build_freeassoc_monomial(f, m);
        EXPECT_TRUE(uses_only_linear_and_psi(w));
        Polynomial target = Polynomial::term(Variant::Free, 4, m, Scalar::one(f));
        EXPECT_EQ(eval_word(w), Endo::elementary(2, target)) << target.str();
      }
}

TEST(DecomposePsiP, Examples) {
  auto gens = decompose_psi_P(P("x^2 + x*y"));
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0], TameGen::elementary(2, P("x^2")));
  EXPECT_EQ(gens[1], TameGen::elementary(2, P("x*y")));
  TameWord a(Variant::Commutative, 3, Q), b(Variant::Commutative, 3, Q);
  a.push(gens[0]).push(gens[1]);
  b.push(gens[1]).push(gens[0]);
  EXPECT_EQ(eval_word(a), eval_word(b));
  EXPECT_EQ(eval_word(a), z_shift(P("x^2 + x*y")));
  EXPECT_TRUE(decompose_psi_P(P("0")).empty());
  EXPECT_THROW(decompose_psi_P(P("x*z")), Error);
}

TEST(Jacobian, WordsHaveConstantDeterminant) {
  for (int m = 1; m <= 4; ++m) {
    auto det = jacobian_det(eval_word(build_alpha_m(m, Scalar(Q, 3L))));
    EXPECT_EQ(det.degree(), 0);
  }
}

TEST(LinearSpan, HomogeneousComponentIsSpanned) {
  // {M∘f : f invertible linear} spans the degree-k forms in x, y, z
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int k = 1; k <= 4; ++k) {
    Polynomial mono = P("x").pow(k);
    std::vector<Polynomial> samples;
    std::map<Monomial, int, MonomialLess> index{MonomialLess{Variant::Commutative}};
    int dim = (k + 1) * (k + 2) / 2;
    while (static_cast<int>(samples.size()) < dim + 3) {
      Matrix a(3, 3, Q);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = Scalar(Q, static_cast<long>(c(rng)));
      if (a.determinant().is_zero()) continue;
      samples.push_back(mono.substitute(Endo::linear(Variant::Commutative, a).images()));
    }
    for (const auto& s : samples)
      for (const auto& [m, co] : s.terms()) index.emplace(m, 0);
    Matrix rows(static_cast<int>(samples.size()), dim, Q);
    int col = 0;
    for (auto& [m, i] : index) i = col++;
    ASSERT_LE(col, dim);
    for (int r = 0; r < static_cast<int>(samples.size()); ++r)
      for (const auto& [m, co] : samples[r].terms()) rows(r, index[m]) = co;
    EXPECT_EQ(rows.rank(), dim) << k;
  }
}

TEST(WordFile, RoundTrip) {
  TameWord w = build_alpha_m(2, Scalar::parse(Q, "3/2"));
  std::string text = w.str();
  EXPECT_EQ(parse_word(text), w);
  EXPECT_EQ(parse_word(text).str(), text);
  TameWord fw = build_freeassoc_monomial(Field::prime(5), {0, 1, 0});
  EXPECT_EQ(parse_word(fw.str()), fw);
  EXPECT_THROW(parse_word("word comm n=2 field=Q\nelem 1 x\n"), Error);
  EXPECT_THROW(parse_word("word comm n=2 field=Q\nlin [[1,0],[0]]\n"), ParseError);
  EXPECT_THROW(parse_word("word comm n=2 field=Q\nswap\n"), ParseError);
  EXPECT_EQ(eval_word(parse_word("word comm n=2 field=Q\nelem 1 y^2 ^-1\n")), Endo::elementary(0, P("-y^2", 2)));
}

}  // namespace
