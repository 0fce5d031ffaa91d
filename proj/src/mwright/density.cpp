#include <cmath>
#include <string>

#include "wright_stein/constants.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/mwright.hpp"
#include "wright_stein/numerics.hpp"
#include "wright_stein/specfun.hpp"

namespace wright_stein::mwright {

using namespace constants;

namespace {

constexpr double kRouteTolerance = 1e-12;

WrightParameter::Route route_for(double beta) {
  if (beta == 0.0) return WrightParameter::Route::exponential;
  if (std::abs(beta - 1.0 / 3.0) < kRouteTolerance) return WrightParameter::Route::airy;
  if (std::abs(beta - 0.5) < kRouteTolerance) return WrightParameter::Route::gaussian;
  return WrightParameter::Route::series;
}

// 3^{2/3} Ai(x / 3^{1/3}) through the scaled values, so it underflows to 0
// instead of overflowing in Bi.
double airy_density(double x) {
  const specfun::ScaledAiry s = specfun::airy_scaled(x / kCbrt3);
  return kCbrt9 * s.ai * std::exp(-s.zeta);
}

}  // namespace

WrightParameter::WrightParameter(double beta) : beta_(beta), route_(route_for(beta)) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw DomainError("WrightParameter: beta must lie in [0, 1), got " + std::to_string(beta));
  }
}

double density(WrightParameter p, double x) {
  if (!(x >= 0.0)) throw DomainError("density: x must be >= 0");
  switch (p.route()) {
    case WrightParameter::Route::exponential:
      return std::exp(-x);
    case WrightParameter::Route::airy:
      return airy_density(x);
    case WrightParameter::Route::gaussian:
      return std::exp(-0.25 * x * x) / kSqrtPi;
    case WrightParameter::Route::series:
      break;
  }
  return specfun::wright_m_series(p.beta(), x);
}

double density_prime_at_zero() { return -1.0 / kGammaOneThird; }

double density_sym(WrightParameter p, double x) { return 0.5 * density(p, std::abs(x)); }

double cdf(double x, const numerics::QuadratureConfig& cfg) {
  if (!(x >= 0.0)) throw DomainError("cdf: x must be >= 0");
  const auto m = [](double t) { return airy_density(t); };
  if (x <= 2.0) return numerics::integrate(m, 0.0, x, cfg).value;
  // Upper tail keeps the result monotone and exactly 1 far out.
  const auto tail = specfun::airy_ai_tail(kCbrt9, 1.0 / kCbrt3);
  const auto upper = numerics::integrate_semi_infinite(m, x, tail, cfg);
  return 1.0 - upper.value;
}

double moment(int n) {
  if (n < 0) throw DomainError("moment: order must be non-negative");
  if (n > 12) throw RangeError("moment: order above 12 is outside the validated range");
  return std::tgamma(n + 1.0) / std::tgamma(n / 3.0 + 1.0);
}

std::pair<double, double> laplace_check(double t, const numerics::QuadratureConfig& cfg) {
  if (!(t >= 0.0)) throw DomainError("laplace_check: t must be >= 0");
  if (t > 5.0) throw RangeError("laplace_check: t must not exceed 5");
  const auto tail = specfun::airy_ai_tail(kCbrt9, 1.0 / kCbrt3);
  const auto transform = numerics::integrate_semi_infinite(
      [t](double x) { return std::exp(-x * t) * airy_density(x); }, 0.0, tail, cfg);
  return {transform.value, specfun::mittag_leffler(1.0 / 3.0, -t)};
}

}  // namespace wright_stein::mwright
