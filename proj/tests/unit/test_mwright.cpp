#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/mwright.hpp"
#include "wright_stein/numerics.hpp"
#include "wright_stein/specfun.hpp"

using namespace wright_stein;
using namespace wright_stein::mwright;

TEST(WrightParameter, Routes) {
  EXPECT_EQ(WrightParameter(0.0).route(), WrightParameter::Route::exponential);
  EXPECT_EQ(WrightParameter(1.0 / 3.0).route(), WrightParameter::Route::airy);
  EXPECT_EQ(WrightParameter(0.5).route(), WrightParameter::Route::gaussian);
  EXPECT_EQ(WrightParameter(1.0 / 7.0).route(), WrightParameter::Route::series);
  EXPECT_THROW(WrightParameter(1.0), DomainError);
  EXPECT_THROW(WrightParameter(-0.01), DomainError);
}

TEST(Density, ClosedFormsMatchSeries) {
  for (double x = 0.0; x <= 5.0; x += 0.01) {
    EXPECT_NEAR(density(WrightParameter::half(), x), specfun::wright_m_series(0.5, x), 1e-9);
    EXPECT_NEAR(density(WrightParameter::third(), x), specfun::wright_m_series(1.0 / 3.0, x),
                1e-9);
    EXPECT_NEAR(density(WrightParameter::zero(), x), specfun::wright_m_series(0.0, x), 1e-9);
  }
}

TEST(Density, ValuesAtZero) {
  EXPECT_NEAR(density(WrightParameter::third(), 0.0), oracle::kDensityZero, 1e-14);
  EXPECT_NEAR(density_prime_at_zero(), oracle::kDensityPrimeZero, 1e-14);
  EXPECT_NEAR(density(WrightParameter(1.0 / 7.0), 0.0), oracle::kWrightSeventh[0].value, 1e-13);
}

TEST(Density, SeriesRouteStopsAtItsRange) {
  const WrightParameter p(1.0 / 7.0);
  EXPECT_NO_THROW(density(p, 8.0));
  EXPECT_NO_THROW(density(p, 16.0));
  EXPECT_THROW(density(p, 20.0), RangeError);
}

TEST(Density, Normalization) {
  const auto m = [](double x) { return density(WrightParameter::third(), x); };
  EXPECT_NEAR(numerics::integrate(m, 0.0, 40.0).value, 1.0, 1e-8);
  EXPECT_NEAR(cdf(40.0), 1.0, 1e-12);
}

TEST(Density, ThirdOrderOde) {
  // q = 3: M'' = (x/3) M for the Airy form.
  const auto m = [](double x) { return density(WrightParameter::third(), x); };
  for (double x = 0.01; x <= 8.0; x += 0.05) {
    EXPECT_NEAR(oracle::second_difference(m, x, 1e-3), x * m(x) / 3.0, 1e-6) << x;
  }
}

TEST(Density, HalfOrderOde) {
  // q = 2: M' = -(x/2) M for the Gaussian form.
  const auto m = [](double x) { return density(WrightParameter::half(), x); };
  const double h = 1e-5;
  for (double x = 0.1; x <= 8.0; x += 0.1)
    EXPECT_NEAR((m(x + h) - m(x - h)) / (2 * h), -x / 2 * m(x), 1e-9) << x;
}

TEST(Density, SymmetricIsEvenAndHalved) {
  for (double b : {0.0, 1.0 / 7.0, 1.0 / 3.0, 0.5}) {
    const WrightParameter p(b);
    for (double x : {0.0, 0.3, 1.7, 4.0}) {
      EXPECT_EQ(density_sym(p, x), density_sym(p, -x));
      EXPECT_EQ(density_sym(p, x), 0.5 * density(p, x));
    }
  }
  EXPECT_NEAR(density_sym(WrightParameter::zero(), -2.0), std::exp(-2.0) / 2, 1e-15);
}

TEST(Density, Errors) { EXPECT_THROW(density(WrightParameter::third(), -1.0), DomainError); }

TEST(Cdf, AgainstHighPrecision) {
  for (const auto& p : oracle::kCdfThird) EXPECT_NEAR(cdf(p.x), p.value, 1e-12) << p.x;
  EXPECT_EQ(cdf(0.0), 0.0);
  EXPECT_THROW(cdf(-1.0), DomainError);
}

TEST(Moments, ClosedForm) {
  EXPECT_EQ(moment(0), 1.0);
  EXPECT_NEAR(moment(1), 1.0 / oracle::kGammaFourThirds, 1e-14);
  const auto m = [](double x) { return density(WrightParameter::third(), x); };
  for (int n = 1; n <= 6; ++n) {
    const double q = numerics::integrate([&](double x) { return std::pow(x, n) * m(x); }, 0.0,
                                         40.0, {1e-12, 1e-12, 1000, 40.0})
                         .value;
    EXPECT_NEAR(q / moment(n), 1.0, 1e-10) << n;
  }
  EXPECT_THROW(moment(13), RangeError);
  EXPECT_THROW(moment(-1), DomainError);
}

TEST(Laplace, QuadratureMatchesMittagLeffler) {
  for (double t : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    const auto [quad, ml] = laplace_check(t);
    EXPECT_NEAR(quad, ml, 1e-10) << t;
  }
  EXPECT_THROW(laplace_check(6.0), RangeError);
}

TEST(InverseCdf, TableIsMonotoneAndAccurate) {
  const InverseCdfTable& t = InverseCdfTable::shared();
  const auto& f = t.values();
  for (std::size_t i = 1; i < f.size(); ++i) EXPECT_GE(f[i], f[i - 1]);
  for (const auto& p : oracle::kCdfThird) EXPECT_NEAR(t.interpolated_cdf(p.x), p.value, 1e-9);
  for (double u : {1e-6, 0.1, 0.5, 0.9, 0.999999})
    EXPECT_NEAR(t.interpolated_cdf(t.quantile(u)), u, 1e-12) << u;
}

TEST(Sampling, DeterministicInSeed) {
  const SampleSet a = sample(1000, 7, false);
  const SampleSet b = sample(1000, 7, false);
  EXPECT_EQ(a.values, b.values);
  EXPECT_NE(a.values, sample(1000, 8, false).values);
  EXPECT_EQ(a.seed, 7u);
  EXPECT_EQ(a.size(), 1000u);
  EXPECT_EQ(a.generator, "mwright-1/3");
  EXPECT_EQ(sample(10, 7, true).generator, "mwright-sym-1/3");
  EXPECT_THROW(sample(0, 1, false), DomainError);
}

TEST(Sampling, MeanMatchesFirstMoment) {
  const SampleSet s = sample(100000, 1, false);
  double sum = 0, sum2 = 0;
  for (double v : s.values) {
    EXPECT_GE(v, 0.0);
    sum += v;
    sum2 += v * v;
  }
  const double n = s.size();
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / n);
  EXPECT_NEAR(mean, 1.0 / oracle::kGammaFourThirds, 4 * se);
}

TEST(Sampling, DistributionMatchesCdf) {
  const SampleSet s = sample(50000, 5, false);
  // Kolmogorov distance against the frozen CDF values.
  for (const auto& p : oracle::kCdfThird) {
    double below = 0;
    for (double v : s.values) below += v <= p.x;
    EXPECT_NEAR(below / s.size(), p.value, 4 * std::sqrt(0.25 / s.size())) << p.x;
  }
}

TEST(Sampling, SymmetricSignsAreBalanced) {
  const SampleSet s = sample(40000, 9, true);
  double pos = 0;
  for (double v : s.values) pos += v >= 0;
  EXPECT_NEAR(pos / s.size(), 0.5, 4 * 0.5 / std::sqrt(s.size()));
}

TEST(Sampling, ReferenceLaws) {
  const SampleSet e = sample_exponential(50000, 3);
  const SampleSet g = sample_gaussian(50000, 3, 2.0);
  double me = 0, mg = 0, vg = 0;
  for (double v : e.values) me += v;
  for (double v : g.values) mg += v, vg += v * v;
  me /= e.size();
  mg /= g.size();
  vg /= g.size();
  EXPECT_NEAR(me, 1.0, 4 / std::sqrt(e.size()));
  EXPECT_NEAR(mg, 0.0, 4 * std::sqrt(2.0 / g.size()));
  EXPECT_NEAR(vg, 2.0, 4 * 2.0 * std::sqrt(2.0 / g.size()));
  EXPECT_THROW(sample_gaussian(10, 1, 0.0), DomainError);
}

TEST(SampleCsv, RoundTripIsBitExact) {
  const SampleSet s = sample(500, 42, true);
  std::stringstream io;
  write_csv(io, s);
  const std::string text = io.str();
  EXPECT_EQ(text.rfind("# generator=mwright-sym-1/3 seed=42 n=500\n", 0), 0u);
  const SampleSet back = read_csv(io);
  EXPECT_EQ(back.values, s.values);
  EXPECT_EQ(back.seed, 42u);
  EXPECT_EQ(back.generator, "mwright-sym-1/3");
}

TEST(SampleCsv, ParseErrorNamesLine) {
  std::istringstream in("# comment\n1.5\n\n2.5\nnot-a-number\n");
  try {
    read_csv(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos);
  }
  std::istringstream ok("+1\n-2e-3\n");
  EXPECT_EQ(read_csv(ok).values, (std::vector<double>{1.0, -2e-3}));
}
