#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/specfun.hpp"

using namespace wright_stein;
using namespace wright_stein::specfun;

TEST(MittagLeffler, BetaOneIsExponential) {
  for (double z : {-1.0, 0.0, 1.0, -25.0, 12.5})
    EXPECT_NEAR(mittag_leffler(1.0, z) / std::exp(z), 1.0, 1e-12) << z;
}

TEST(MittagLeffler, ValueAtZero) {
  for (double b : {0.1, 1.0 / 3.0, 0.5, 0.9}) EXPECT_EQ(mittag_leffler(b, 0.0), 1.0);
}

TEST(MittagLeffler, ThirdAgainstHighPrecision) {
  for (const auto& p : oracle::kMittagLefflerThird)
    EXPECT_NEAR(mittag_leffler(1.0 / 3.0, -p.x), p.value, 1e-12) << p.x;
}

TEST(MittagLeffler, HalfIsScaledErfc) {
  for (double t : {0.5, 1.5, 3.0, 10.0, 25.0})
    EXPECT_NEAR(mittag_leffler(0.5, -t), std::exp(t * t) * std::erfc(t), 1e-12) << t;
  EXPECT_NEAR(mittag_leffler(0.5, -3.0), oracle::kMittagLefflerHalfMinus3, 1e-14);
  EXPECT_NEAR(mittag_leffler(0.5, 2.0) / (std::exp(4.0) * std::erfc(-2.0)), 1.0, 1e-12);
}

TEST(MittagLeffler, SwitchesAwayFromCancellingSeries) {
  // E_{0.3}(-2): the series loses ~2e-11 to cancellation.
  EXPECT_NEAR(mittag_leffler(0.3, -2.0), 0.29023222616787535504, 1e-14);
}

TEST(MittagLeffler, OtherIndex) {
  EXPECT_NEAR(mittag_leffler(0.7, -10.0), oracle::kMittagLeffler07Minus10, 1e-11);
}

TEST(MittagLeffler, CompletelyMonotoneOnNegativeAxis) {
  for (double b : {0.2, 1.0 / 3.0, 0.6, 0.95}) {
    double prev = 1.0;
    for (double t = 0.25; t <= 30.0; t += 0.25) {
      const double v = mittag_leffler(b, -t);
      EXPECT_GT(v, 0.0);
      EXPECT_LT(v, prev) << b << ' ' << t;
      prev = v;
    }
  }
}

TEST(MittagLeffler, SeriesAndIntegralAgreeWhereBothWork) {
  for (double b : {0.3, 0.5, 0.8})
    for (double t : {0.5, 1.0, 2.0}) {
      double abs_sum = 0.0;
      const double s = branch::mittag_leffler_series(b, -t, &abs_sum);
      // The series is only trusted within its own rounding estimate.
      const double bound = std::max(1e-14, 4 * std::numeric_limits<double>::epsilon() * abs_sum);
      EXPECT_NEAR(s, branch::mittag_leffler_integral(b, t), bound) << b << ' ' << t;
      EXPECT_GE(abs_sum, std::abs(s));
    }
}

TEST(MittagLeffler, RangeErrors) {
  EXPECT_THROW(mittag_leffler(1.0 / 3.0, 31.0), RangeError);
  EXPECT_THROW(mittag_leffler(1.0 / 3.0, -30.5), RangeError);
  EXPECT_THROW(mittag_leffler(1.0 / 3.0, 30.0), RangeError);  // overflows
  EXPECT_THROW(mittag_leffler(0.0, 1.0), DomainError);
  EXPECT_THROW(mittag_leffler(1.5, 1.0), DomainError);
}
