#include <algorithm>
#include <cmath>
#include <tuple>
#include <utility>
#include <vector>

#include "wright_stein/constants.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/specfun.hpp"

namespace wright_stein::specfun {

namespace {

numerics::QuadratureConfig scorer_config() {
  numerics::QuadratureConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-13;
  cfg.max_subdivisions = 2000;
  return cfg;
}

// Both integrals carry the exponential factor of the outer Airy function, so
// e^{-zeta(x)} int_0^x Bi and e^{zeta(x)} int_x^inf Ai stay O(1/sqrt(x)).
struct ScaledIntegrals {
  double bi_integral = 0.0;
  double ai_integral = 0.0;
};

// Width beyond which exp(-(zeta(x+w) - zeta(x))) drops below e^{-40}.
constexpr double kDecades = 40.0;

ScaledIntegrals scaled_integrals(double x) {
  const auto cfg = scorer_config();
  const double zx = airy_zeta(x);
  ScaledIntegrals out;
  if (x > 0.0) {
    // Only [lo, x] matters: below lo the weight exp(zeta(t) - zeta(x)) < e^{-40}.
    const double lo_zeta = zx - kDecades;
    const double lo = lo_zeta > 0.0 ? std::cbrt(std::pow(1.5 * lo_zeta, 2.0)) : 0.0;
    out.bi_integral = numerics::integrate(
                          [zx](double t) {
                            const ScaledAiry s = airy_scaled(t);
                            return s.bi * std::exp(s.zeta - zx);
                          },
                          lo, x, cfg)
                          .value;
  }
  const double hi = std::cbrt(std::pow(1.5 * (zx + kDecades), 2.0));
  out.ai_integral = numerics::integrate(
                        [zx](double t) {
                          const ScaledAiry s = airy_scaled(t);
                          return s.ai * std::exp(zx - s.zeta);
                        },
                        x, hi, cfg)
                        .value;
  return out;
}

// Golden-section maximisation of g on [a, b].
template <class F>
std::pair<double, double> refine_max(F g, double a, double b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double gc = g(c);
  double gd = g(d);
  for (int it = 0; it < 60 && (b - a) > 1e-10; ++it) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kInvPhi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kInvPhi * (b - a);
      gd = g(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, g(x)};
}

template <class F>
std::pair<double, double> grid_max(F g, const std::vector<double>& grid,
                                   const std::vector<double>& values) {
  const auto it = std::max_element(values.begin(), values.end());
  const auto i = static_cast<std::size_t>(it - values.begin());
  const double lo = grid[i == 0 ? 0 : i - 1];
  const double hi = grid[std::min(i + 1, grid.size() - 1)];
  auto best = refine_max(g, lo, hi);
  if (best.second < *it) best = {grid[i], *it};
  return best;
}

ScorerNorms compute_norms() {
  constexpr double kUpper = 40.0;
  constexpr int kPoints = 2001;
  std::vector<double> grid(kPoints);
  std::vector<double> abs_gi(kPoints);
  std::vector<double> abs_gip(kPoints);
  std::vector<double> abs_xgi(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    const double x = kUpper * i / (kPoints - 1);
    grid[i] = x;
    const ScaledAiry s = airy_scaled(x);
    const ScaledIntegrals in = scaled_integrals(x);
    const double gi = s.ai * in.bi_integral + s.bi * in.ai_integral;
    const double gip = s.ai_prime * in.bi_integral + s.bi_prime * in.ai_integral;
    abs_gi[i] = std::abs(gi);
    abs_gip[i] = std::abs(gip);
    abs_xgi[i] = std::abs(x * gi);
  }
  ScorerNorms n;
  std::tie(n.argmax_gi, n.sup_gi) =
      grid_max([](double x) { return std::abs(scorer_gi(x)); }, grid, abs_gi);
  std::tie(n.argmax_gi_prime, n.sup_gi_prime) =
      grid_max([](double x) { return std::abs(scorer_gi_prime(x)); }, grid, abs_gip);
  std::tie(n.argmax_x_gi, n.sup_x_gi) =
      grid_max([](double x) { return std::abs(x * scorer_gi(x)); }, grid, abs_xgi);
  return n;
}

}  // namespace

double scorer_gi(double x) {
  if (!(x >= 0.0)) throw DomainError("scorer_gi: argument must be >= 0");
  const ScaledAiry s = airy_scaled(x);
  const ScaledIntegrals in = scaled_integrals(x);
  return s.ai * in.bi_integral + s.bi * in.ai_integral;
}

double scorer_gi_prime(double x) {
  if (!(x >= 0.0)) throw DomainError("scorer_gi_prime: argument must be >= 0");
  const ScaledAiry s = airy_scaled(x);
  const ScaledIntegrals in = scaled_integrals(x);
  return s.ai_prime * in.bi_integral + s.bi_prime * in.ai_integral;
}

const ScorerNorms& scorer_gi_norms() {
  static const ScorerNorms norms = compute_norms();
  return norms;
}

}  // namespace wright_stein::specfun
