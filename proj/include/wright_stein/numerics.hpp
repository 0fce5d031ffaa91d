#pragma once

#include <functional>

namespace wright_stein::numerics {

/// Tolerances and cutoffs shared by every quadrature in the library.
///
/// `truncation_point` replaces +infinity in semi-infinite integrals; the
/// integrand's decay past it is accounted for by a caller-supplied tail bound.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 1000;
  double truncation_point = 40.0;

  /// Throws DomainError unless all tolerances and the cutoff are positive.
  void validate() const;

  /// Acceptance threshold for an integral of size |value|.
  double tolerance_for(double value) const;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Upper bound for the integral of |f| over [T, infinity), as a function of T.
using TailBound = std::function<double(double)>;

/// Gamma function for x > 0 (backed by std::tgamma).
double gamma_fn(double x);

/// 1/Gamma(y) for any real y, with 1/Gamma(-k) = 0 for k = 0, 1, 2, ...
double rgamma(double y);

/// sin(pi*y) with exact zeros at the integers.
double sin_pi(double y);

/// Adaptive Gauss-Kronrod (10/21) quadrature over [a, b].
///
/// Subdivides the interval with the largest error until the summed error
/// estimate is within cfg.tolerance_for(value). Throws ToleranceNotMet (with
/// the best estimate) when max_subdivisions is exhausted, NanIntegrand when f
/// produces NaN.
IntegralResult integrate(const Integrand& f, double a, double b,
                         const QuadratureConfig& cfg = {});

/// Integral over [a, infinity) as integrate(f, a, T) plus tail(T) folded into
/// the error estimate, with T = cfg.truncation_point. For a >= T the value is 0
/// and the error estimate is tail(a).
IntegralResult integrate_semi_infinite(const Integrand& f, double a,
                                       const TailBound& tail,
                                       const QuadratureConfig& cfg = {});

/// Tail bound for |f(t)| <= scale * exp(-rate * t).
TailBound exponential_tail(double scale, double rate);

}  // namespace wright_stein::numerics
