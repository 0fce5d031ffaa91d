#include <algorithm>
#include <cmath>

#include "wright_stein/kernels.hpp"

namespace wright_stein::kernels::detail {

namespace {

double eval_one(const UniformTable& t, double s) {
  const double u = (s - t.x0) / t.step;
  const double fi = std::max(std::min(std::floor(u), static_cast<double>(t.n - 2)), 0.0);
  const std::size_t i = static_cast<std::size_t>(fi);
  const double w = u - fi;

  // Cubic Hermite on cell [i, i+1].
  const double w2 = w * w;
  const double w3 = w2 * w;
  const double h00 = 2.0 * w3 - 3.0 * w2 + 1.0;
  const double h10 = w3 - 2.0 * w2 + w;
  const double h01 = -2.0 * w3 + 3.0 * w2;
  const double h11 = w3 - w2;
  const double f = h00 * t.f[i] + h10 * t.step * t.f_prime[i] + h01 * t.f[i + 1] +
                   h11 * t.step * t.f_prime[i + 1];

  // Lagrange through nodes j..j+3.
  const double fj = std::max(std::min(fi - 1.0, static_cast<double>(t.n - 4)), 0.0);
  const std::size_t j = static_cast<std::size_t>(fj);
  const double v = u - fj;
  const double v1 = v - 1.0;
  const double v2 = v - 2.0;
  const double v3 = v - 3.0;
  const double l0 = -(v1 * v2 * v3) / 6.0;
  const double l1 = (v * v2 * v3) / 2.0;
  const double l2 = -(v * v1 * v3) / 2.0;
  const double l3 = (v * v1 * v2) / 6.0;
  const double* d = t.f_double_prime + j;
  const double f2 = l0 * d[0] + l1 * d[1] + l2 * d[2] + l3 * d[3];

  return f2 - s * f / 3.0;
}

}  // namespace

void stein_operator_scalar(const UniformTable& table, const double* s, std::size_t count,
                           double* out) {
  for (std::size_t k = 0; k < count; ++k) out[k] = eval_one(table, s[k]);
}

}  // namespace wright_stein::kernels::detail
