#pragma once

#include <cstddef>

namespace wright_stein::kernels {

/// A half-line solution tabulated on x0 + i*step, i = 0..n-1 (n >= 4).
struct UniformTable {
  double x0 = 0.0;
  double step = 0.0;
  std::size_t n = 0;
  const double* f = nullptr;
  const double* f_prime = nullptr;
  const double* f_double_prime = nullptr;
};

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

/// True when the running CPU supports AVX2.
bool avx2_available();

/// The fastest variant the CPU supports.
Isa best_isa();

/// out[k] = f''(s[k]) - s[k] f(s[k]) / 3 with f from the cubic Hermite
/// interpolant of (f, f') and f'' from four-point Lagrange interpolation.
/// Samples are expected inside the table; outside it the end cells are
/// extrapolated. Every variant returns bitwise-identical results.
void stein_operator_batch(const UniformTable& table, const double* s, std::size_t count,
                          double* out, Isa isa);

inline void stein_operator_batch(const UniformTable& table, const double* s, std::size_t count,
                                 double* out) {
  stein_operator_batch(table, s, count, out, best_isa());
}

namespace detail {
void stein_operator_scalar(const UniformTable& table, const double* s, std::size_t count,
                           double* out);
void stein_operator_avx2(const UniformTable& table, const double* s, std::size_t count,
                         double* out);
}  // namespace detail

}  // namespace wright_stein::kernels
