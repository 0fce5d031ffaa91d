#include <cmath>
#include <utility>

#include "wright_stein/mwright.hpp"
#include "wright_stein/stein.hpp"

namespace wright_stein::stein {

SmoothFunction with_finite_differences(std::function<double(double)> f, double step) {
  SmoothFunction out;
  out.value = f;
  out.first = [f, step](double x) {
    return (f(x - 2 * step) - 8 * f(x - step) + 8 * f(x + step) - f(x + 2 * step)) /
           (12 * step);
  };
  out.second = [f, step](double x) {
    return (-f(x - 2 * step) + 16 * f(x - step) - 30 * f(x) + 16 * f(x + step) -
            f(x + 2 * step)) /
           (12 * step * step);
  };
  return out;
}

double stein_apply(const SmoothFunction& f, double x) {
  return f.second(x) - x * f.value(x) / 3.0;
}

double stein_apply_sym(const SmoothFunction& f, double x) {
  return f.second(x) - std::abs(x) * f.value(x) / 3.0;
}

double expectation_mwright(const TestFunction& h, bool negate,
                           const numerics::QuadratureConfig& cfg) {
  const auto p = mwright::WrightParameter::third();
  const double sign = negate ? -1.0 : 1.0;
  // Integrating h - h(0) against the (unit-mass) density keeps constants exact.
  const double h0 = h(0.0);
  return h0 + numerics::integrate(
                  [&](double x) { return (h(sign * x) - h0) * mwright::density(p, x); }, 0.0,
                  cfg.truncation_point, cfg)
                  .value;
}

const char* to_string(SolutionKind kind) {
  return kind == SolutionKind::half_line ? "half-line" : "symmetric";
}

}  // namespace wright_stein::stein
