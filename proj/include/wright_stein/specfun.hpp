#pragma once

#include "wright_stein/numerics.hpp"

namespace wright_stein::specfun {

/// Ai, Bi and derivatives at one non-negative point.
///
/// The scaled fields remove the exponential behaviour, so products such as
/// Ai(a) * Bi(b) for a > b can be formed as
/// exp(zeta(b) - zeta(a)) * ai_scaled(a) * bi_scaled(b) without overflow.
struct AiryValues {
  double ai = 0.0;
  double ai_prime = 0.0;
  double bi = 0.0;
  double bi_prime = 0.0;
  double zeta = 0.0;       // (2/3) x^{3/2}
  double ai_scaled = 0.0;  // Ai * e^{zeta}
  double bi_scaled = 0.0;  // Bi * e^{-zeta}
};

/// Exponentially scaled Airy values; valid for every x >= 0.
struct ScaledAiry {
  double zeta = 0.0;
  double ai = 0.0;        // Ai  * e^{zeta}
  double ai_prime = 0.0;  // Ai' * e^{zeta}
  double bi = 0.0;        // Bi  * e^{-zeta}
  double bi_prime = 0.0;  // Bi' * e^{-zeta}
};

/// Seams of the Airy evaluation scheme.
inline constexpr double kAiMaclaurinLimit = 2.0;
inline constexpr double kAsymptoticSwitch = 8.0;

double airy_zeta(double x);

/// Throws DomainError for x < 0.
ScaledAiry airy_scaled(double x);

/// Throws DomainError for x < 0 and OverflowError once Bi(x) leaves the
/// double range (x above ~104).
AiryValues airy(double x);

/// Individual branches, exposed for the overlap tests. Each accepts any
/// x >= 0 but is only accurate inside its own region.
namespace branch {
ScaledAiry maclaurin(double x);
ScaledAiry asymptotic(double x);
/// Ai and Ai' (unscaled) by Taylor expansion about the nearest table knot.
void ai_from_knots(double x, double& ai, double& ai_prime);
}  // namespace branch

/// Bound on the integral of Ai(scale * t) over [T, infinity), times `amplitude`.
numerics::TailBound airy_ai_tail(double amplitude, double scale);

/// Scorer's function Gi(x) = Ai(x) int_0^x Bi + Bi(x) int_x^inf Ai, x >= 0.
double scorer_gi(double x);

/// Gi'(x) = Ai'(x) int_0^x Bi + Bi'(x) int_x^inf Ai, x >= 0.
double scorer_gi_prime(double x);

/// Suprema over x >= 0 located by grid search on [0, 40] and local
/// golden-section refinement. Computed once and cached.
struct ScorerNorms {
  double sup_gi = 0.0;
  double argmax_gi = 0.0;
  double sup_gi_prime = 0.0;
  double argmax_gi_prime = 0.0;
  double sup_x_gi = 0.0;
  double argmax_x_gi = 0.0;
};

const ScorerNorms& scorer_gi_norms();

/// E_beta(z) = sum z^n / Gamma(beta n + 1) for beta in (0, 1], |z| <= 30.
///
/// Uses the power series while its rounding error stays below 1e-12; for
/// negative z where the alternating series cancels too badly it switches to
/// the integral representation of the completely monotone E_beta(-t).
/// Throws RangeError when |z| > 30 or the value overflows.
double mittag_leffler(double beta, double z);

inline constexpr double kMittagLefflerMaxAbsZ = 30.0;

namespace branch {
double mittag_leffler_series(double beta, double z, double* abs_term_sum = nullptr);
double mittag_leffler_integral(double beta, double t);
}  // namespace branch

/// Wright M-function series sum (-x)^n / (n! Gamma(1 - beta - beta n)),
/// beta in [0, 1), 0 <= x <= x_max(beta).
///
/// Summed in extended precision. x_max(beta) is where the rounding-error
/// estimate 8 eps sum |terms| reaches 1e-11; beyond it RangeError. x_max is at
/// least 8 for beta <= 1/2 and about 17 for beta = 1/7.
double wright_m_series(double beta, double x);

}  // namespace wright_stein::specfun
