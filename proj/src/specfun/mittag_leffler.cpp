#include <cmath>
#include <limits>
#include <string>

#include "wright_stein/constants.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/specfun.hpp"

namespace wright_stein::specfun {

namespace {

constexpr double kSeriesRoundoffLimit = 1e-12;

}  // namespace

namespace branch {

double mittag_leffler_series(double beta, double z, double* abs_term_sum) {
  if (z == 0.0) {
    if (abs_term_sum) *abs_term_sum = 1.0;
    return 1.0;
  }
  const double log_abs_z = std::log(std::abs(z));
  double sum = 0.0;
  double compensation = 0.0;
  double abs_sum = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int n = 0; n < 1000000; ++n) {
    const double arg = beta * n + 1.0;
    double magnitude;
    if (arg < 170.0 && n < 300) {
      magnitude = std::pow(std::abs(z), n) / std::tgamma(arg);
    } else {
      magnitude = std::exp(n * log_abs_z - std::lgamma(arg));
    }
    const double term = (z < 0.0 && n % 2 == 1) ? -magnitude : magnitude;
    const double y = term - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    abs_sum += magnitude;
    if (!std::isfinite(abs_sum)) break;
    if (magnitude < previous && magnitude <= 1e-17 * std::abs(sum)) break;
    previous = magnitude;
  }
  if (abs_term_sum) *abs_term_sum = abs_sum;
  return sum;
}

double mittag_leffler_integral(double beta, double t) {
  // E_b(-t) = sin(b pi)/(b pi) int_0^inf exp(-(t u)^{1/b}) / (u^2 + 2u cos(b pi) + 1) du,
  // split at u = 1 and mapped onto [0, 1] by u = 1/v for the upper half.
  const double c = std::cos(beta * constants::kPi);
  const double inv_beta = 1.0 / beta;
  numerics::QuadratureConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-13;
  cfg.max_subdivisions = 4000;
  const auto lower = numerics::integrate(
      [=](double u) { return std::exp(-std::pow(t * u, inv_beta)) / (u * u + 2.0 * u * c + 1.0); },
      0.0, 1.0, cfg);
  const auto upper = numerics::integrate(
      [=](double v) {
        if (v == 0.0) return 0.0;
        return std::exp(-std::pow(t / v, inv_beta)) / (1.0 + 2.0 * v * c + v * v);
      },
      0.0, 1.0, cfg);
  return std::sin(beta * constants::kPi) / (beta * constants::kPi) * (lower.value + upper.value);
}

}  // namespace branch

double mittag_leffler(double beta, double z) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw DomainError("mittag_leffler: beta must lie in (0, 1], got " + std::to_string(beta));
  }
  if (!(std::abs(z) <= kMittagLefflerMaxAbsZ)) {
    throw RangeError("mittag_leffler: |z| must not exceed 30, got " + std::to_string(z));
  }
  if (beta == 1.0) return std::exp(z);

  double abs_sum = 0.0;
  const double series = branch::mittag_leffler_series(beta, z, &abs_sum);
  if (z >= 0.0) {
    if (!std::isfinite(series)) {
      throw RangeError("mittag_leffler: E_beta(z) overflows at z = " + std::to_string(z));
    }
    return series;
  }
  if (std::isfinite(abs_sum) &&
      abs_sum * std::numeric_limits<double>::epsilon() <= kSeriesRoundoffLimit) {
    return series;
  }
  return branch::mittag_leffler_integral(beta, -z);
}

}  // namespace wright_stein::specfun
