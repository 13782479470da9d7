#include <gtest/gtest.h>

#include <random>

#include "gl2sing/laurent.hpp"

using namespace gl2sing;

namespace {

LaurentPoly lp(const FieldSpec& F, std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly r(F);
  for (auto [k, c] : terms) r = r + LaurentPoly::monomial(F.from_int(c), k);
  return r;
}

Mat2Laurent random_mat(const FieldSpec& F, std::mt19937_64& rng) {
  auto rp = [&] {
    LaurentPoly r(F);
    for (int k = -2; k <= 2; ++k) r = r + LaurentPoly::monomial(F.random(rng), k);
    return r;
  };
  return {rp(), rp(), rp(), rp()};
}

}  // namespace

TEST(Laurent, ValuationExamples) {
  const FieldSpec& F = FieldSpec::get(5);
  EXPECT_EQ(v_valuation(lp(F, {{1, 1}, {5, 1}})), 1);
  EXPECT_EQ(v_valuation(lp(F, {{-2, 3}})), -2);
  EXPECT_THROW(v_valuation(LaurentPoly(F)), Error);
}

TEST(Laurent, ArithmeticCancelsTerms) {
  const FieldSpec& F = FieldSpec::get(5);
  LaurentPoly a = lp(F, {{-1, 2}, {3, 1}});
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a * LaurentPoly::one(F), a);
  EXPECT_EQ(lp(F, {{-1, 1}}) * lp(F, {{1, 1}}), LaurentPoly::one(F));
  EXPECT_EQ(a.shift(2).min_exponent(), 1);
  EXPECT_EQ(lp(F, {{0, 1}, {1, 1}}).evaluate(F.from_int(2)), F.from_int(3));
}

TEST(Laurent, MatMulExamples) {
  const FieldSpec& F = FieldSpec::get(5);
  LaurentPoly v = LaurentPoly::v_pow(F, 1), one = LaurentPoly::one(F), zero(F);
  Mat2Laurent a{lp(F, {{-1, 2}}), v, one, lp(F, {{3, 4}})};
  EXPECT_EQ(a * Mat2Laurent::identity(F), a);
  EXPECT_EQ(Mat2Laurent::diag(v, one) * Mat2Laurent::diag(one, v), Mat2Laurent::diag(v, v));
  Mat2Laurent anti{zero, one, v, zero};
  EXPECT_EQ(anti * anti, Mat2Laurent::diag(v, v));
  EXPECT_EQ(anti, Mat2Laurent::w0_t_eta(F));
}

TEST(Laurent, AdConjugationExamples) {
  const FieldSpec& F = FieldSpec::get(5);
  LaurentPoly v = LaurentPoly::v_pow(F, 1), one = LaurentPoly::one(F), zero(F);
  Mat2Laurent d = Mat2Laurent::diag(lp(F, {{2, 3}}), lp(F, {{-1, 1}}));
  EXPECT_EQ(ad_diag_conj(d, {3, -2}), d);
  Mat2Laurent m{zero, one, v, zero};
  Mat2Laurent expect{zero, v, one, zero};
  EXPECT_EQ(ad_diag_conj(m, {1, 0}), expect);
}

TEST(Laurent, AdConjugationAgreesWithMatrixProduct) {
  const FieldSpec& F = FieldSpec::get(7);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    Mat2Laurent m = random_mat(F, rng);
    int a = static_cast<int>(rng() % 5) - 2, b = static_cast<int>(rng() % 5) - 2;
    Mat2Laurent s = Mat2Laurent::diag(LaurentPoly::v_pow(F, a), LaurentPoly::v_pow(F, b));
    Mat2Laurent sinv = Mat2Laurent::diag(LaurentPoly::v_pow(F, -a), LaurentPoly::v_pow(F, -b));
    EXPECT_EQ(ad_diag_conj(m, {a, b}), s * m * sinv);
  }
}

TEST(Laurent, MultiplicationIsAssociativeAndDetMultiplicative) {
  const FieldSpec& F = FieldSpec::get(5, 2);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    Mat2Laurent a = random_mat(F, rng), b = random_mat(F, rng), c = random_mat(F, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).det(), a.det() * b.det());
  }
}

TEST(Laurent, InverseOfMonomialDeterminant) {
  const FieldSpec& F = FieldSpec::get(7);
  for (const Mat2Laurent& m : {Mat2Laurent::w0_t_eta(F), Mat2Laurent::t_w0_eta(F), Mat2Laurent::w0(F)}) {
    EXPECT_EQ(m * m.inverse(), Mat2Laurent::identity(F));
  }
  LaurentPoly one = LaurentPoly::one(F);
  Mat2Laurent bad{one, one, one, lp(F, {{1, 1}})};  // det = v - 1
  EXPECT_THROW(bad.inverse(), Error);
}

TEST(Laurent, AEtaMembershipExamples) {
  const FieldSpec& F = FieldSpec::get(5);
  LaurentPoly v = LaurentPoly::v_pow(F, 1), one = LaurentPoly::one(F), zero(F);
  EXPECT_TRUE(is_in_A_eta(Mat2Laurent::diag(one, v)));
  EXPECT_FALSE(is_in_A_eta(Mat2Laurent::diag(lp(F, {{-1, 1}}), lp(F, {{2, 1}}))));
  EXPECT_TRUE(is_in_A_eta(Mat2Laurent{zero, one, v, zero}));
  // Lower-left entry must vanish mod v.
  EXPECT_FALSE(is_in_A_eta(Mat2Laurent{v, zero, one, one}));
  // Determinant valuation must be one.
  EXPECT_FALSE(is_in_A_eta(Mat2Laurent::identity(F)));
  Mat2Laurent w = Mat2Laurent::diag(one, v);
  EXPECT_EQ(v_valuation(w.det()), 1);
}

TEST(Laurent, ProjectivePointsNormalize) {
  const FieldSpec& F = FieldSpec::get(5);
  EXPECT_EQ(ProjPoint(F.from_int(2), F.from_int(4)), ProjPoint(F.from_int(3), F.one()));
  EXPECT_EQ(ProjPoint(F.from_int(3), F.zero()), ProjPoint(F.one(), F.zero()));
  EXPECT_THROW(ProjPoint(F.zero(), F.zero()), Error);
}
