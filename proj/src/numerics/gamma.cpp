#include <cmath>
#include <numbers>
#include <string>

#include "wright_stein/errors.hpp"
#include "wright_stein/numerics.hpp"

namespace wright_stein::numerics {

double gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw DomainError("gamma_fn: argument must be positive, got " + std::to_string(x));
  }
  const double g = std::tgamma(x);
  if (!std::isfinite(g)) {
    throw OverflowError("gamma_fn: result overflows at x = " + std::to_string(x));
  }
  return g;
}

double sin_pi(double y) {
  // Reduce to r in [0, 2) so integer arguments give an exact zero.
  double r = std::fmod(y, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  if (r > 1.0) return -std::sin(std::numbers::pi * (r - 1.0));
  return std::sin(std::numbers::pi * r);
}

double rgamma(double y) {
  if (y > 0.0) {
    if (y > 171.0) return std::exp(-std::lgamma(y));
    return 1.0 / std::tgamma(y);
  }
  const double nearest = std::round(y);
  if (std::abs(y - nearest) <= 1e-12 * std::max(1.0, std::abs(y))) return 0.0;
  // Reflection: 1/Gamma(y) = sin(pi y) Gamma(1 - y) / pi.
  const double s = sin_pi(y);
  if (1.0 - y > 171.0) return s * std::exp(std::lgamma(1.0 - y)) / std::numbers::pi;
  return s * std::tgamma(1.0 - y) / std::numbers::pi;
}

}  // namespace wright_stein::numerics
