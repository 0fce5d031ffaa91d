#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/specfun.hpp"

using namespace wright_stein;
using namespace wright_stein::specfun;

TEST(Scorer, MatchesHighPrecisionValues) {
  for (const auto& p : oracle::kScorerGi) EXPECT_NEAR(scorer_gi(p.x), p.value, 1e-13) << p.x;
  for (const auto& p : oracle::kScorerGiPrime)
    EXPECT_NEAR(scorer_gi_prime(p.x), p.value, 1e-13) << p.x;
}

TEST(Scorer, ValueAtZero) {
  EXPECT_NEAR(scorer_gi(0.0), airy(0.0).bi / 3.0, 1e-14);
  EXPECT_NEAR(scorer_gi(0.0), 0.2049755425, 1e-10);
}

TEST(Scorer, InhomogeneousAiryEquation) {
  // Direct substitution gives Gi'' - x Gi = -1/pi.
  const double h = 1e-3;
  for (double x : {0.5, 1.0, 2.0}) {
    const double d2 = (scorer_gi(x + h) - 2 * scorer_gi(x) + scorer_gi(x - h)) / (h * h);
    EXPECT_NEAR(d2 - x * scorer_gi(x), -1.0 / M_PI, 1e-7) << x;
  }
}

TEST(Scorer, DerivativeMatchesDifferences) {
  const double h = 1e-4;
  for (double x : {0.3, 1.5, 6.0, 15.0}) {
    const double d = (scorer_gi(x + h) - scorer_gi(x - h)) / (2 * h);
    EXPECT_NEAR(scorer_gi_prime(x), d, 1e-8) << x;
  }
}

TEST(Scorer, Asymptotics) {
  EXPECT_LE(std::abs(20.0 * M_PI * scorer_gi(20.0) - 1.0), 1e-3);
  // Gi'(x) ~ -1/(pi x^2).
  EXPECT_LE(std::abs(scorer_gi_prime(20.0) * (-400.0 * M_PI) - 1.0), 5e-3);
}

TEST(Scorer, Norms) {
  const ScorerNorms& n = scorer_gi_norms();
  // Brute-force lower bounds on a 0.005 grid (within ~1e-7 of the true maxima).
  double sup_gi = 0, sup_xgi = 0, sup_gip = 0;
  for (double x = 0.0; x <= 40.0; x += 0.005) {
    sup_gi = std::max(sup_gi, std::abs(scorer_gi(x)));
    sup_xgi = std::max(sup_xgi, std::abs(x * scorer_gi(x)));
    if (x <= 5.0) sup_gip = std::max(sup_gip, std::abs(scorer_gi_prime(x)));
  }
  EXPECT_GE(n.sup_gi, sup_gi - 1e-14);
  EXPECT_GE(n.sup_x_gi, sup_xgi - 1e-14);
  EXPECT_GE(n.sup_gi_prime, sup_gip - 1e-14);
  EXPECT_NEAR(n.sup_gi, sup_gi, 1e-6);
  EXPECT_NEAR(n.sup_x_gi, sup_xgi, 1e-6);
  EXPECT_NEAR(n.sup_gi_prime, sup_gip, 1e-6);
  // Maximisers located with mpmath root finding on the derivatives.
  EXPECT_NEAR(n.sup_gi, 0.24577778954958976251, 1e-12);
  EXPECT_NEAR(n.argmax_gi, 0.60907541707305096506, 1e-5);
  EXPECT_NEAR(n.sup_x_gi, 0.34571256639696665473, 1e-12);
  EXPECT_NEAR(n.argmax_x_gi, 2.5307634919749295415, 1e-5);
  EXPECT_NEAR(n.sup_gi_prime, 0.14942945245127545264, 1e-12);
  EXPECT_NEAR(n.argmax_gi_prime, 0.0, 1e-6);
  EXPECT_GE(n.sup_x_gi, 1.0 / M_PI - 1e-3);
  EXPECT_TRUE(std::isfinite(n.sup_x_gi));
  EXPECT_GT(n.sup_x_gi, 0.0);
}

TEST(Scorer, Errors) {
  EXPECT_THROW(scorer_gi(-1.0), DomainError);
  EXPECT_THROW(scorer_gi_prime(-1.0), DomainError);
}
