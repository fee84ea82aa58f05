#include "fovclass/acuity.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fovclass/error.hpp"

namespace fovclass {
namespace {

TEST(Snellen, ParsesCommonForms) {
  EXPECT_EQ(parse_snellen("20/20"), (SnellenFraction{20, 20}));
  EXPECT_EQ(parse_snellen("20/40"), (SnellenFraction{20, 40}));
  EXPECT_EQ(parse_snellen("6/6"), (SnellenFraction{6, 6}));
  EXPECT_EQ(parse_snellen(" 20/12.5 "), (SnellenFraction{20, 12.5}));
}

TEST(Snellen, RejectsMalformedTextNamingTheToken) {
  for (const char* bad : {"", "20", "20/", "/20", "20/20/20", "a/20", "20/-5", "20/0", "0/20",
                          "20/1e3", "20/inf", "20/nan", "2..0/20"}) {
    EXPECT_THROW(parse_snellen(bad), ParseError) << bad;
  }
  try {
    parse_snellen("20/x4");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'x4'"), std::string::npos) << e.what();
  }
}

TEST(Snellen, LabelRoundTrips) {
  EXPECT_EQ(parse_snellen("20/20").label(), "20/20");
  EXPECT_EQ(parse_snellen("6/6").label(), "6/6");
  EXPECT_EQ(parse_snellen("20/12.5").label(), "20/12.5");
}

TEST(Snellen, ToCpdIsExact) {
  EXPECT_EQ(snellen_to_cpd({20, 20}), 30.0);
  EXPECT_EQ(snellen_to_cpd({20, 40}), 15.0);
  EXPECT_EQ(snellen_to_cpd({20, 10}), 60.0);
  EXPECT_EQ(snellen_to_cpd({6, 6}), 30.0);
}

// Reference values from 40-digit evaluation of 1 / (D tan(pi / (360 r))).
TEST(CpdToDpi, MatchesHighPrecisionEvaluation) {
  struct Case {
    double cpd, distance, dpi;
  };
  const Case cases[] = {
      {30, 24, 143.23944474259177016},
      {30, 12, 286.47888948518354031},
      {15, 24, 71.619716311124700279},
      {60, 24, 286.47889554535459691},
      {7.2, 20, 41.252941048847247473},
  };
  for (const auto& c : cases) {
    EXPECT_NEAR(cpd_to_dpi(c.cpd, c.distance), c.dpi, c.dpi * 1e-12) << c.cpd << " " << c.distance;
  }
}

TEST(CpdToDpi, RejectsNonPositiveInputs) {
  EXPECT_THROW(cpd_to_dpi(0, 24), DomainError);
  EXPECT_THROW(cpd_to_dpi(30, 0), DomainError);
  EXPECT_THROW(cpd_to_dpi(-1, 24), DomainError);
}

TEST(CpdToDpi, IncreasesWithResolutionDecreasesWithDistance) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<> r(1.0, 100.0);
  std::uniform_real_distribution<> d(1.0, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double r1 = r(rng), r2 = r1 * 1.01, d1 = d(rng), d2 = d1 * 1.01;
    EXPECT_LT(cpd_to_dpi(r1, d1), cpd_to_dpi(r2, d1));
    EXPECT_GT(cpd_to_dpi(r1, d1), cpd_to_dpi(r1, d2));
  }
}

TEST(MakeAdf, Defaults) {
  const auto cf = make_adf(AdfKind::ConstantFoveaSize, {20, 20});
  EXPECT_EQ(cf.foveal_acuity(), 30.0);
  EXPECT_EQ(cf.roll_off(), 75.0);
  EXPECT_EQ(cf.fovea_half_width(), 2.0);
  const auto slope = make_adf(AdfKind::Slope, {20, 20});
  EXPECT_EQ(slope.roll_off(), 0.55);
  EXPECT_EQ(make_adf(AdfKind::ConstantFoveaSize, {20, 40}).foveal_acuity(), 15.0);
  EXPECT_EQ(make_adf(AdfKind::Slope, {20, 20}, 2.0, kWertheimSlope).roll_off(), 0.44);
}

TEST(MakeAdf, RejectsInvalidParameters) {
  EXPECT_THROW(make_adf(AdfKind::ConstantFoveaSize, {20, 20}, -1.0), InvariantError);
  EXPECT_THROW(make_adf(AdfKind::ConstantFoveaSize, {20, 20}, 2.0, 0.0), InvariantError);
  EXPECT_THROW(make_adf(AdfKind::Slope, {20, 20}, 2.0, -0.5), InvariantError);
  EXPECT_THROW(AcuityModel(AdfKind::Slope, 0.0, 0.55, 2.0), InvariantError);
}

TEST(AdfEval, ConstantFoveaExamples) {
  const auto m = make_adf(AdfKind::ConstantFoveaSize, {20, 20});
  EXPECT_EQ(m(0.0), 30.0);
  EXPECT_EQ(m(2.0), 30.0);
  EXPECT_DOUBLE_EQ(m(4.5), 15.0);  // 75 / (2.5 + 2.5)
  EXPECT_THROW(m(-0.1), DomainError);
}

TEST(AdfEval, SlopeExample) {
  const auto m = make_adf(AdfKind::Slope, {20, 20}, 2.0, 0.55);
  EXPECT_DOUBLE_EQ(m(12.0), 30.0 / (0.55 * 10.0 + 1.0));
  EXPECT_NEAR(m(12.0), 4.615, 5e-4);
}

TEST(AdfEval, FoveationErrorWidensPlateau) {
  const auto base = make_adf(AdfKind::ConstantFoveaSize, {20, 20});
  EXPECT_EQ(inflate_for_foveation_error(base, 5.0)(5.0), 30.0);
  EXPECT_EQ(inflate_for_foveation_error(base, 1.0)(3.0), 30.0);
  const auto ten = inflate_for_foveation_error(base, 10.0);
  EXPECT_EQ(ten(12.0), 30.0);
  EXPECT_LT(ten(12.1), 30.0);
  EXPECT_EQ(ten.plateau_end(), 12.0);
  EXPECT_EQ(inflate_for_foveation_error(base, 0.0), base);
  EXPECT_THROW(inflate_for_foveation_error(base, -1.0), DomainError);
}

AcuityModel random_model(std::mt19937_64& rng, AdfKind kind, double F) {
  std::uniform_real_distribution<> e0(0.0, 5.0);
  std::uniform_real_distribution<> s(kind == AdfKind::Slope ? 0.1 : 10.0,
                                     kind == AdfKind::Slope ? 1.0 : 150.0);
  return AcuityModel(kind, F, s(rng), e0(rng));
}

class AdfProperty : public ::testing::TestWithParam<AdfKind> {};

TEST_P(AdfProperty, ContinuousAtFoveaEdge) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<> F(3.0, 60.0);
  for (int i = 0; i < 200; ++i) {
    auto m = random_model(rng, GetParam(), F(rng));
    // Relative slope just past e0 is F/S (constant fovea) or S' (slope), so
    // a 1e-6 step stays within 1e-6 relative once S >= F.
    if (m.kind() == AdfKind::ConstantFoveaSize && m.roll_off() < m.foveal_acuity()) {
      m = AcuityModel(m.kind(), m.foveal_acuity(), m.foveal_acuity() * 1.5,
                      m.fovea_half_width());
    }
    const double e0 = m.fovea_half_width();
    const double lo = m(std::max(e0 - 1e-6, 0.0));
    const double hi = m(e0 + 1e-6);
    EXPECT_NEAR(lo, hi, 1e-6 * lo);
  }
}

TEST_P(AdfProperty, GapAtFoveaEdgeVanishes) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<> F(3.0, 60.0);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_model(rng, GetParam(), F(rng));
    const double e0 = m.fovea_half_width();
    double previous = std::abs(m(e0) - m(e0 + 1e-3));
    for (double delta = 1e-4; delta >= 1e-10; delta /= 10.0) {
      const double gap = std::abs(m(e0) - m(e0 + delta));
      EXPECT_LE(gap, previous);
      previous = gap;
    }
    EXPECT_LT(previous, 1e-6 * m.foveal_acuity());
  }
}

TEST_P(AdfProperty, MonotoneNonIncreasingInEccentricity) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<> F(3.0, 60.0);
  std::uniform_real_distribution<> e(0.0, 90.0);
  for (int i = 0; i < 500; ++i) {
    const auto m = random_model(rng, GetParam(), F(rng));
    double a = e(rng), b = e(rng);
    if (a > b) std::swap(a, b);
    EXPECT_GE(m(a), m(b));
  }
}

TEST_P(AdfProperty, MonotoneNonDecreasingInFovealAcuity) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<> F(3.0, 60.0);
  std::uniform_real_distribution<> e(0.0, 90.0);
  for (int i = 0; i < 500; ++i) {
    const auto m = random_model(rng, GetParam(), F(rng));
    const double lower_f = m.foveal_acuity() * std::uniform_real_distribution<>(0.1, 1.0)(rng);
    const AcuityModel worse(m.kind(), lower_f, m.roll_off(), m.fovea_half_width());
    const double x = e(rng);
    EXPECT_LE(worse(x), m(x));
  }
}

TEST_P(AdfProperty, InflationDominates) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<> F(3.0, 60.0);
  std::uniform_real_distribution<> e(0.0, 90.0);
  std::uniform_real_distribution<> err(0.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const auto m = random_model(rng, GetParam(), F(rng));
    const auto inflated = inflate_for_foveation_error(m, err(rng));
    const double x = e(rng);
    EXPECT_GE(inflated(x), m(x));
  }
}

INSTANTIATE_TEST_SUITE_P(BothModels, AdfProperty,
                         ::testing::Values(AdfKind::ConstantFoveaSize, AdfKind::Slope));

TEST(AdfKindText, RoundTrips) {
  EXPECT_EQ(parse_adf_kind(to_string(AdfKind::Slope)), AdfKind::Slope);
  EXPECT_EQ(parse_adf_kind("constant-fovea"), AdfKind::ConstantFoveaSize);
  EXPECT_THROW(parse_adf_kind("linear"), ParseError);
}

}  // namespace
}  // namespace fovclass
