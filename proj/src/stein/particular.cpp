#include <algorithm>
#include <cmath>
#include <sstream>

#include "wright_stein/constants.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/specfun.hpp"
#include "wright_stein/stein.hpp"

namespace wright_stein::stein {

using namespace constants;

// Evaluated in the same scaled form as HalfLineGreen, with a = k^{2/3} in
// place of 3^{-1/3}.
double general_particular_solution(double k, const TestFunction& f, double x,
                                   const numerics::QuadratureConfig& cfg) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("general_particular_solution: k must be positive");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("general_particular_solution: x must be >= 0");
  cfg.validate();
  const double a = std::cbrt(k * k);
  const specfun::ScaledAiry sx = specfun::airy_scaled(a * x);

  double p = 0.0;
  if (x > 0.0) {
    p = numerics::integrate(
            [&](double t) {
              const specfun::ScaledAiry s = specfun::airy_scaled(a * t);
              return s.bi * std::exp(s.zeta - sx.zeta) * f(t);
            },
            0.0, x, cfg)
            .value;
  }
  // exp(zeta(a x) - zeta(a t)) < e^{-40} past `end`.
  const double end = std::max(x, std::pow(1.5 * (sx.zeta + 40.0), 2.0 / 3.0) / a);
  const double q = numerics::integrate(
                       [&](double t) {
                         const specfun::ScaledAiry s = specfun::airy_scaled(a * t);
                         return s.ai * std::exp(sx.zeta - s.zeta) * f(t);
                       },
                       x, end, cfg)
                       .value;
  const double value = -kPi / a * (sx.ai * p + sx.bi * q);
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "general_particular_solution: non-finite value at x = " << x;
    throw OverflowError(os.str());
  }
  return value;
}

}  // namespace wright_stein::stein
