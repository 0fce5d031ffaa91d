#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wright_stein/numerics.hpp"

namespace wright_stein::mwright {

/// Index beta in [0, 1) of the M-Wright density M_beta.
///
/// beta = 0, 1/3 and 1/2 have closed forms (e^{-x}, 3^{2/3} Ai(x / 3^{1/3}),
/// e^{-x^2/4}/sqrt(pi)) which take precedence over the series.
class WrightParameter {
 public:
  enum class Route { exponential, airy, gaussian, series };

  explicit WrightParameter(double beta);

  static WrightParameter zero() { return WrightParameter(0.0); }
  static WrightParameter third() { return WrightParameter(1.0 / 3.0); }
  static WrightParameter half() { return WrightParameter(0.5); }

  double beta() const noexcept { return beta_; }
  Route route() const noexcept { return route_; }

 private:
  double beta_;
  Route route_;
};

/// Draws plus their provenance. Immutable once built.
struct SampleSet {
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::string generator;

  std::size_t size() const noexcept { return values.size(); }
};

/// M_beta(x), x >= 0.
double density(WrightParameter p, double x);

/// M_{1/3}'(0) = -1/Gamma(1/3).
double density_prime_at_zero();

/// (1/2) M_beta(|x|).
double density_sym(WrightParameter p, double x);

/// Distribution function of M_{1/3}.
double cdf(double x, const numerics::QuadratureConfig& cfg = {});

/// Inverse-CDF draws from M_{1/3} (or from the symmetrised law when
/// `symmetric`, via an independent fair sign per draw). Deterministic in seed.
SampleSet sample(std::size_t n, std::uint64_t seed, bool symmetric);

/// Reference laws used to exercise the goodness-of-fit tests.
SampleSet sample_exponential(std::size_t n, std::uint64_t seed);
SampleSet sample_gaussian(std::size_t n, std::uint64_t seed, double variance);

/// E[Y^n] = n! / Gamma(n/3 + 1) for Y ~ M_{1/3}, 0 <= n <= 12.
double moment(int n);

/// (int_0^inf e^{-xt} M_{1/3}(x) dx, E_{1/3}(-t)) for t in [0, 5].
std::pair<double, double> laplace_check(double t, const numerics::QuadratureConfig& cfg = {});

/// Table of the M_{1/3} distribution function used by `sample`.
class InverseCdfTable {
 public:
  static constexpr std::size_t kKnots = 4000;
  static constexpr double kUpper = 40.0;

  InverseCdfTable();

  /// Smallest x with F(x) >= u, from the monotone cubic interpolant.
  double quantile(double u) const;

  /// The interpolated distribution function.
  double interpolated_cdf(double x) const;

  const std::vector<double>& knots() const noexcept { return x_; }
  const std::vector<double>& values() const noexcept { return f_; }

  static const InverseCdfTable& shared();

 private:
  double hermite(std::size_t cell, double x) const;

  std::vector<double> x_;
  std::vector<double> f_;
  std::vector<double> slope_;
};

/// "# generator=<label> seed=<int> n=<int>" then one value per line.
void write_csv(std::ostream& out, const SampleSet& samples);

/// Reads one value per line; '#' lines and blank lines are skipped.
/// Throws ParseError naming the offending line.
SampleSet read_csv(std::istream& in);

}  // namespace wright_stein::mwright
