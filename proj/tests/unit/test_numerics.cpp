#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wright_stein/constants.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/numerics.hpp"

using namespace wright_stein;
using namespace wright_stein::numerics;

TEST(Gamma, KnownValues) {
  EXPECT_EQ(gamma_fn(1.0), 1.0);
  EXPECT_NEAR(gamma_fn(0.5), std::sqrt(M_PI), 1e-15);
  EXPECT_NEAR(gamma_fn(1.0 / 3.0) / oracle::kGammaThird - 1.0, 0.0, 1e-12);
  EXPECT_NEAR(gamma_fn(2.0 / 3.0) / oracle::kGammaTwoThirds - 1.0, 0.0, 1e-12);
  EXPECT_NEAR(gamma_fn(4.0 / 3.0) / oracle::kGammaFourThirds - 1.0, 0.0, 1e-12);
}

TEST(Gamma, PrecomputedConstantsAgree) {
  EXPECT_NEAR(constants::kGammaOneThird, gamma_fn(1.0 / 3.0), 1e-14);
  EXPECT_NEAR(constants::kGammaTwoThirds, gamma_fn(2.0 / 3.0), 1e-14);
  EXPECT_NEAR(constants::kGammaFourThirds, gamma_fn(4.0 / 3.0), 1e-14);
}

TEST(Gamma, Recurrence) {
  for (double x = 0.1; x <= 20.0; x += 0.1)
    EXPECT_NEAR(gamma_fn(x + 1.0) / (x * gamma_fn(x)), 1.0, 1e-12) << "x = " << x;
}

TEST(Gamma, FactorialsUpTo50) {
  double fact = 1.0;
  for (int n = 1; n <= 49; ++n) {
    fact *= n;
    EXPECT_NEAR(gamma_fn(n + 1.0) / fact, 1.0, 1e-12) << n;
  }
}

TEST(Gamma, RejectsNonPositive) {
  EXPECT_THROW(gamma_fn(0.0), DomainError);
  EXPECT_THROW(gamma_fn(-1.5), DomainError);
  EXPECT_THROW(gamma_fn(std::nan("")), DomainError);
}

TEST(Gamma, ReciprocalHasZerosAtPoles) {
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(rgamma(-k), 0.0);
  EXPECT_NEAR(rgamma(-0.5), -0.5 / std::sqrt(M_PI), 1e-15);
  EXPECT_NEAR(rgamma(3.0), 0.5, 1e-15);
}

TEST(Integrate, Constant) {
  const IntegralResult r = integrate([](double) { return 1.0; }, 0.0, 1.0);
  EXPECT_NEAR(r.value, 1.0, 1e-15);
  EXPECT_GE(r.error_estimate, 0.0);
  EXPECT_GT(r.evaluations, 0);
}

TEST(Integrate, ExponentialToTruncation) {
  const QuadratureConfig cfg;
  const IntegralResult r =
      integrate([](double x) { return std::exp(-x); }, 0.0, cfg.truncation_point, cfg);
  EXPECT_NEAR(r.value, 1.0, 1e-10);
  EXPECT_LE(r.error_estimate, cfg.tolerance_for(r.value));
}

TEST(Integrate, HalfGaussianFirstMoment) {
  const IntegralResult r = integrate(
      [](double x) { return x * std::exp(-x * x / 4.0) / std::sqrt(M_PI); }, 0.0, 40.0);
  EXPECT_NEAR(r.value, 2.0 / std::sqrt(M_PI), 1e-10);
}

TEST(Integrate, EmptyIntervalAndReversedBounds) {
  EXPECT_EQ(integrate([](double) { return 1.0; }, 2.0, 2.0).value, 0.0);
  EXPECT_THROW(integrate([](double) { return 1.0; }, 2.0, 1.0), DomainError);
}

TEST(Integrate, NanNamesAbscissa) {
  try {
    integrate([](double x) { return x > 0.5 ? std::nan("") : 1.0; }, 0.0, 1.0);
    FAIL() << "expected NanIntegrand";
  } catch (const NanIntegrand& e) {
    EXPECT_GT(e.abscissa(), 0.5);
    EXPECT_LE(e.abscissa(), 1.0);
  }
}

TEST(Integrate, ToleranceNotMetCarriesEstimate) {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 3;
  try {
    integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, cfg);
    FAIL() << "expected ToleranceNotMet";
  } catch (const ToleranceNotMet& e) {
    EXPECT_TRUE(std::isfinite(e.value()));
    EXPECT_GT(e.error_estimate(), 0.0);
  }
}

TEST(Integrate, Additivity) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double p = u(rng), q = u(rng), w = 1.0 + std::abs(u(rng));
    auto f = [&](double x) { return std::sin(w * x + p) * std::exp(q * x / 4.0); };
    double a = u(rng), b = u(rng), c = u(rng);
    if (a > b) std::swap(a, b);
    c = a + (b - a) * (0.5 + c / 5.0);
    const IntegralResult left = integrate(f, a, c);
    const IntegralResult right = integrate(f, c, b);
    const IntegralResult whole = integrate(f, a, b);
    EXPECT_NEAR(left.value + right.value, whole.value,
                left.error_estimate + right.error_estimate + whole.error_estimate + 1e-15);
  }
}

TEST(Integrate, Linearity) {
  auto f = [](double x) { return std::cos(3 * x); };
  auto g = [](double x) { return 1.0 / (1.0 + x * x); };
  const double alpha = 2.5, beta = -0.75;
  const double lhs =
      integrate([&](double x) { return alpha * f(x) + beta * g(x); }, 0.0, 4.0).value;
  const double rhs = alpha * integrate(f, 0.0, 4.0).value + beta * integrate(g, 0.0, 4.0).value;
  EXPECT_NEAR(lhs, rhs, 1e-10);
}

TEST(SemiInfinite, ExponentialFromTen) {
  const IntegralResult r = integrate_semi_infinite([](double x) { return std::exp(-x); }, 10.0,
                                                   exponential_tail(1.0, 1.0));
  EXPECT_NEAR(r.value, std::exp(-10.0), 1e-14);
}

TEST(SemiInfinite, BeyondTruncationReturnsZeroWithTailBound) {
  const QuadratureConfig cfg;
  const IntegralResult r = integrate_semi_infinite([](double x) { return std::exp(-x); }, 50.0,
                                                   exponential_tail(1.0, 1.0), cfg);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_NEAR(r.error_estimate, std::exp(-50.0), 1e-30);
}

TEST(Config, Validation) {
  QuadratureConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.abs_tol = 0.0;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = {};
  cfg.truncation_point = -1.0;
  EXPECT_THROW(cfg.validate(), DomainError);
}
