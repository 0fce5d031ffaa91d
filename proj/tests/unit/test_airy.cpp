#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/numerics.hpp"
#include "wright_stein/specfun.hpp"

using namespace wright_stein;
using namespace wright_stein::specfun;

namespace {
double rel(double a, double b) { return std::abs(a / b - 1.0); }
}  // namespace

TEST(Airy, InitialValues) {
  const AiryValues v = airy(0.0);
  EXPECT_NEAR(v.ai, 1.0 / (std::cbrt(9.0) * oracle::kGammaTwoThirds), 1e-13);
  EXPECT_NEAR(v.bi, 1.0 / (std::pow(3.0, 1.0 / 6.0) * oracle::kGammaTwoThirds), 1e-13);
  EXPECT_NEAR(v.ai_prime, -1.0 / (std::cbrt(3.0) * oracle::kGammaThird), 1e-13);
  EXPECT_NEAR(v.bi_prime, std::pow(3.0, 1.0 / 6.0) / oracle::kGammaThird, 1e-13);
  EXPECT_NEAR(v.ai, 0.3550280539, 1e-10);
  EXPECT_NEAR(v.bi, 0.6149266274, 1e-10);
}

TEST(Airy, MatchesHighPrecisionTable) {
  for (const auto& row : oracle::kAiry) {
    const AiryValues v = airy(row.x);
    if (row.x <= 5.0) {
      EXPECT_NEAR(v.ai, row.ai, 1e-12) << row.x;
      EXPECT_NEAR(v.ai_prime, row.ai_prime, 1e-12) << row.x;
    }
    EXPECT_LE(rel(v.ai, row.ai), 1e-13) << row.x;
    EXPECT_LE(rel(v.ai_prime, row.ai_prime), 1e-13) << row.x;
    EXPECT_LE(rel(v.bi, row.bi), 1e-13) << row.x;
    EXPECT_LE(rel(v.bi_prime, row.bi_prime), 1e-13) << row.x;
  }
}

TEST(Airy, BesselCrossCheck) {
  for (double x = 0.25; x <= 40.0; x += 0.75) {
    const AiryValues v = airy(x);
    EXPECT_LE(rel(v.ai, oracle::bessel_ai(x)), 1e-10) << x;
    EXPECT_LE(rel(v.bi, oracle::bessel_bi(x)), 1e-10) << x;
  }
}

TEST(Airy, Wronskian) {
  for (int i = 0; i < 200; ++i) {
    const double x = 10.0 * i / 199.0;
    const AiryValues v = airy(x);
    EXPECT_NEAR(v.ai * v.bi_prime - v.ai_prime * v.bi, 1.0 / M_PI, 1e-10) << x;
  }
}

TEST(Airy, ScaledWronskianToForty) {
  for (double x = 0.0; x <= 40.0; x += 0.5) {
    const ScaledAiry s = airy_scaled(x);
    EXPECT_NEAR((s.ai * s.bi_prime - s.ai_prime * s.bi) * M_PI, 1.0, 1e-12) << x;
  }
}

TEST(Airy, SatisfiesAiryEquation) {
  const double h = 1e-3;
  for (double x = 0.5; x <= 8.0; x += 0.5) {
    const double d2 = (airy(x + h).ai - 2 * airy(x).ai + airy(x - h).ai) / (h * h);
    EXPECT_NEAR(d2, x * airy(x).ai, 1e-7) << x;
  }
}

TEST(Airy, PositiveOnHalfLine) {
  for (double x = 0.0; x <= 100.0; x += 0.5) {
    const AiryValues v = airy(x);
    EXPECT_GT(v.ai, 0.0);
    EXPECT_GT(v.bi, 0.0);
  }
}

TEST(Airy, ScaledFieldsMatchUnscaled) {
  for (double x : {0.3, 4.0, 9.0, 25.0}) {
    const AiryValues v = airy(x);
    EXPECT_NEAR(v.ai_scaled / (v.ai * std::exp(v.zeta)), 1.0, 1e-14) << x;
    EXPECT_NEAR(v.bi_scaled / (v.bi * std::exp(-v.zeta)), 1.0, 1e-14) << x;
    EXPECT_NEAR(v.ai * v.bi / (v.ai_scaled * v.bi_scaled), 1.0, 1e-14) << x;
  }
}

TEST(Airy, LeadingAsymptoticAtTen) {
  const double x = 10.0;
  const double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
  const double lead = 0.5 / std::sqrt(M_PI) * std::pow(x, -0.25) * std::exp(-zeta);
  EXPECT_LE(rel(airy(x).ai, lead), 2e-2);
}

TEST(Airy, BranchesAgreeAtSeams) {
  const ScaledAiry m = branch::maclaurin(kAsymptoticSwitch);
  const ScaledAiry a = branch::asymptotic(kAsymptoticSwitch);
  EXPECT_LE(rel(m.bi, a.bi), 1e-13);
  EXPECT_LE(rel(m.bi_prime, a.bi_prime), 1e-13);
  double ai = 0, aip = 0;
  branch::ai_from_knots(kAsymptoticSwitch, ai, aip);
  EXPECT_LE(rel(ai * std::exp(a.zeta), a.ai), 1e-13);
  EXPECT_LE(rel(aip * std::exp(a.zeta), a.ai_prime), 1e-13);
  const ScaledAiry m2 = branch::maclaurin(kAiMaclaurinLimit);
  branch::ai_from_knots(kAiMaclaurinLimit, ai, aip);
  EXPECT_LE(rel(ai * std::exp(m2.zeta), m2.ai), 1e-13);
  EXPECT_LE(rel(aip * std::exp(m2.zeta), m2.ai_prime), 1e-13);
}

TEST(Airy, ContinuousAcrossSeams) {
  for (double seam : {kAiMaclaurinLimit, kAsymptoticSwitch}) {
    const AiryValues lo = airy(std::nextafter(seam, 0.0));
    const AiryValues hi = airy(std::nextafter(seam, 100.0));
    EXPECT_LE(rel(lo.ai, hi.ai), 1e-13);
    EXPECT_LE(rel(lo.bi, hi.bi), 1e-13);
  }
}

TEST(Airy, Errors) {
  EXPECT_THROW(airy(-0.1), DomainError);
  EXPECT_THROW(airy_scaled(-1.0), DomainError);
  EXPECT_THROW(airy(150.0), OverflowError);
  EXPECT_THROW(airy(250.0), OverflowError);
  const ScaledAiry s = airy_scaled(250.0);
  EXPECT_TRUE(std::isfinite(s.ai) && std::isfinite(s.bi));
  EXPECT_GT(s.ai, 0.0);
}

TEST(Airy, SemiInfiniteIntegralOfAi) {
  const auto ai = [](double x) { return airy_scaled(x).ai * std::exp(-airy_zeta(x)); };
  const numerics::IntegralResult r =
      numerics::integrate_semi_infinite(ai, 0.0, airy_ai_tail(1.0, 1.0));
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-8);
  const numerics::IntegralResult far =
      numerics::integrate_semi_infinite(ai, 50.0, airy_ai_tail(1.0, 1.0));
  EXPECT_EQ(far.value, 0.0);
  EXPECT_LT(far.error_estimate, 1e-30);
}
