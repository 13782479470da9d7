#include <gtest/gtest.h>

#include <random>

#include "gl2sing/charts.hpp"

using namespace gl2sing;

namespace {

const int kValidK[9] = {0, 2, 1, 1, 2, 1, 1, 0, 0};

LaurentPoly lp(const FieldSpec& F, int c, int k) { return LaurentPoly::monomial(F.from_int(c), k); }

ChartParams zero_params(const FieldSpec& F, const LocalChartCase& c) {
  ChartParams p;
  for (ChartVar v : case_variables(c)) p[static_cast<int>(v)] = F.zero();
  return p;
}

}  // namespace

TEST(Charts, CaseValidation) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(LocalChartCase::make(n, kValidK[n]).number(), n);
    EXPECT_THROW(LocalChartCase::make(n, kValidK[n] == 0 ? 1 : 0), Error);
  }
  EXPECT_THROW(LocalChartCase::make(9, 1), Error);
}

TEST(Charts, TemplateIsIdentityAtZero) {
  const FieldSpec& F = FieldSpec::get(5);
  for (int n = 1; n <= 8; ++n) {
    auto c = LocalChartCase::make(n, kValidK[n]);
    EXPECT_EQ(x_template(c, zero_params(F, c)), Mat2Laurent::identity(F)) << n;
  }
}

TEST(Charts, TemplateExamples) {
  const FieldSpec& F = FieldSpec::get(7);
  auto c5 = LocalChartCase::make(5, 1);
  ChartParams p;
  FieldElement b = F.from_int(2), cc = F.from_int(3), d = F.from_int(5);
  p[static_cast<int>(ChartVar::B)] = b;
  p[static_cast<int>(ChartVar::C)] = cc;
  p[static_cast<int>(ChartVar::D)] = d;
  Mat2Laurent expect{LaurentPoly::one(F) - LaurentPoly::monomial(d, -1), LaurentPoly::monomial(b, -1),
                     LaurentPoly::monomial(cc, -1), LaurentPoly::one(F) + LaurentPoly::monomial(d, -1)};
  EXPECT_EQ(x_template(c5, p), expect);

  auto c7 = LocalChartCase::make(7, 0);
  ChartParams q;
  q[static_cast<int>(ChartVar::C)] = F.from_int(4);
  Mat2Laurent e7{LaurentPoly::one(F), lp(F, 4, -1), LaurentPoly(F), LaurentPoly::one(F)};
  EXPECT_EQ(x_template(c7, q), e7);

  ChartParams extra = q;
  extra[static_cast<int>(ChartVar::B)] = F.one();
  EXPECT_THROW(x_template(c7, extra), Error);
  EXPECT_THROW(x_template(c5, q), Error);
}

TEST(Charts, ShapeConditionExamples) {
  const FieldSpec& F = FieldSpec::get(5);
  LaurentPoly v = LaurentPoly::v_pow(F, 1), one = LaurentPoly::one(F);
  EXPECT_TRUE(shape_condition_check(Mat2Laurent::diag(v, one), Side::L));
  EXPECT_FALSE(shape_condition_check(Mat2Laurent::diag(one, v), Side::L));
  EXPECT_TRUE(shape_condition_check(Mat2Laurent::diag(one, v), Side::R));
}

TEST(Charts, SamplesSatisfyRelationsAndIdeals) {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{5, 1}, {7, 2}}) {
    const FieldSpec& F = FieldSpec::get(p, e);
    for (int n = 1; n <= 8; ++n) {
      auto c = LocalChartCase::make(n, kValidK[n]);
      auto rel = ba_relations(F, c);
      EXPECT_TRUE(sample_ba_point(F, c, std::nullopt, 1, 0).empty());
      for (const auto& s : sample_ba_point(F, c, std::nullopt, 11, 40)) {
        auto pt = chart_coordinates(s);
        EXPECT_TRUE(rel.vanishes_at(pt)) << n;
        Mat2Laurent W = compute_w(s, c);
        EXPECT_TRUE(is_in_A_eta(W));
        EXPECT_EQ(v_valuation(W.det()), 1);
      }
      for (Side side : {Side::L, Side::R}) {
        if (table_ideal_is_unit(c, side)) continue;
        auto ideal = table_ideal(F, c, side);
        for (const auto& s : sample_ba_point(F, c, side, 12, 30)) {
          EXPECT_TRUE(ideal.vanishes_at(chart_coordinates(s)));
          EXPECT_TRUE(shape_condition_check(compute_w(s, c), side)) << n << " " << to_string(side);
        }
      }
    }
  }
}

TEST(Charts, SideRestrictedSampleExamples) {
  const FieldSpec& F = FieldSpec::get(7);
  for (const auto& s : sample_ba_point(F, LocalChartCase::make(1, 2), Side::L, 3, 50))
    EXPECT_TRUE(s.params[static_cast<int>(ChartVar::B)]->is_zero());
  for (const auto& s : sample_ba_point(F, LocalChartCase::make(5, 1), Side::R, 3, 50)) {
    auto x = chart_coordinates(s);
    EXPECT_TRUE((x[X_] * x[YP] - x[Y_] * x[XP]).is_zero());
  }
  for (const auto& s : sample_ba_point(F, LocalChartCase::make(2, 1), std::nullopt, 3, 50))
    EXPECT_TRUE(shape_condition_check(compute_w(s, LocalChartCase::make(2, 1)), Side::R));
}

TEST(Charts, ComputeWIsLiftIndependent) {
  const FieldSpec& F = FieldSpec::get(11);
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 8; ++n) {
    auto c = LocalChartCase::make(n, kValidK[n]);
    for (const auto& s : sample_ba_point(F, c, std::nullopt, 21, 20)) {
      auto [lk, rt] = standard_lifts(s);
      FieldElement lam = F.random_nonzero(rng), mu = F.random_nonzero(rng);
      Mat2Laurent W = compute_w_lifts(lk, s.params, rt, c);
      Mat2Laurent W2 = compute_w_lifts(lk.scaled(lam), s.params, rt.scaled(mu), c);
      // W2 = W * lam / mu.
      EXPECT_EQ(W2, W * (lam / mu)) << n;
      for (Side side : {Side::L, Side::R}) EXPECT_EQ(shape_condition_check(W, side), shape_condition_check(W2, side));
    }
  }
}

TEST(Charts, TableRowsVerify) {
  const FieldSpec& F = FieldSpec::get(7, 2);
  for (int n = 1; n <= 8; ++n)
    for (Side side : {Side::L, Side::R}) {
      auto r = verify_table_row(F, LocalChartCase::make(n, kValidK[n]), side, 60, 99);
      EXPECT_TRUE(r.ok()) << n << " " << to_string(side);
      EXPECT_EQ(r.trials, 60u);
    }
  auto r6 = verify_table_row(FieldSpec::get(5), LocalChartCase::make(6, 1), Side::R, 50, 1);
  EXPECT_EQ(r6.condition_true, r6.trials);
}

TEST(Charts, AmbientMembership) {
  const FieldSpec& F = FieldSpec::get(5);
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(ambient_membership_check(F, LocalChartCase::make(n, kValidK[n]), 60, 4).ok());
}

TEST(Charts, JacobianExamples) {
  const FieldSpec& F = FieldSpec::get(5);
  IdealSpec cone = cone_ideal(F);
  EXPECT_EQ(jacobian_rank(cone, {F.zero(), F.zero(), F.zero()}), 0);
  EXPECT_EQ(jacobian_rank(cone, {F.one(), -F.one(), F.one()}), 1);
  EXPECT_THROW(jacobian_rank(cone, {F.one(), F.one(), F.one()}), Error);
}

TEST(Charts, ConeParametrizationLiesOnCone) {
  const FieldSpec& F = FieldSpec::get(7, 2);
  IdealSpec cone = cone_ideal(F);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    auto x = cone_parametrization(F.random(rng), F.random(rng));
    EXPECT_TRUE(cone.vanishes_at({x[0], x[1], x[2]}));
  }
}

TEST(Charts, ConeScanOverF5) {
  auto r = singular_locus_scan(FieldSpec::get(5));
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.cone_points, 25u);
  EXPECT_EQ(r.singular_points, 1u);
  EXPECT_TRUE(r.singular_only_at_origin);
  EXPECT_TRUE(r.parametrization_covers_cone);
  EXPECT_EQ(r.cone_dimension, 2);
  EXPECT_EQ(r.singular_codim, 2);
  auto s = singular_locus_sample(FieldSpec::get(5, 2), 200, 3);
  EXPECT_TRUE(s.singular_only_at_origin);
}

TEST(Charts, AllThreeNonNormalCodimension) {
  for (int f : {1, 2}) {
    auto r = all3_nonnormal_count(FieldSpec::get(5), f);
    EXPECT_EQ(r.y_codim, f);
    EXPECT_EQ(r.z_codim, f);
    EXPECT_GT(r.y_nonnormal_points, 0u);
  }
}
