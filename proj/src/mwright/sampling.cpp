#include <algorithm>
#include <cmath>
#include <random>

#include "wright_stein/constants.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/mwright.hpp"

namespace wright_stein::mwright {

namespace {

// 53-bit uniform on [0, 1); the engine is specified by the standard, so the
// stream is reproducible across platforms.
double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

SampleSet make_set(std::size_t n, std::uint64_t seed, std::string generator) {
  if (n == 0) throw DomainError("sample: n must be at least 1");
  SampleSet s;
  s.seed = seed;
  s.generator = std::move(generator);
  s.values.reserve(n);
  return s;
}

}  // namespace

InverseCdfTable::InverseCdfTable() : x_(kKnots), f_(kKnots), slope_(kKnots) {
  numerics::QuadratureConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-13;
  const WrightParameter third = WrightParameter::third();
  for (std::size_t i = 0; i < kKnots; ++i) {
    x_[i] = kUpper * static_cast<double>(i) / static_cast<double>(kKnots - 1);
    slope_[i] = density(third, x_[i]);
  }
  f_[0] = 0.0;
  for (std::size_t i = 1; i < kKnots; ++i) {
    const auto cell = numerics::integrate([&](double t) { return density(third, t); }, x_[i - 1],
                                          x_[i], cfg);
    f_[i] = f_[i - 1] + cell.value;
  }
  const double total = f_.back();
  for (double& v : f_) v /= total;
  for (double& d : slope_) d /= total;

  // Fritsch-Carlson limiter: keeps each cubic cell monotone.
  for (std::size_t i = 0; i + 1 < kKnots; ++i) {
    const double h = x_[i + 1] - x_[i];
    const double secant = (f_[i + 1] - f_[i]) / h;
    if (secant <= 0.0) {
      slope_[i] = 0.0;
      slope_[i + 1] = 0.0;
      continue;
    }
    const double a = slope_[i] / secant;
    const double b = slope_[i + 1] / secant;
    const double r = a * a + b * b;
    if (r > 9.0) {
      const double tau = 3.0 / std::sqrt(r);
      slope_[i] = tau * a * secant;
      slope_[i + 1] = tau * b * secant;
    }
  }
}

double InverseCdfTable::hermite(std::size_t cell, double x) const {
  const double h = x_[cell + 1] - x_[cell];
  const double t = (x - x_[cell]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * f_[cell] + (t3 - 2 * t2 + t) * h * slope_[cell] +
         (-2 * t3 + 3 * t2) * f_[cell + 1] + (t3 - t2) * h * slope_[cell + 1];
}

double InverseCdfTable::interpolated_cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= kUpper) return 1.0;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const auto cell = static_cast<std::size_t>(it - x_.begin()) - 1;
  return hermite(cell, x);
}

double InverseCdfTable::quantile(double u) const {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return kUpper;
  // First knot with F >= u; the root lies in the cell ending there.
  const auto it = std::lower_bound(f_.begin(), f_.end(), u);
  const auto hi = static_cast<std::size_t>(it - f_.begin());
  const std::size_t cell = hi - 1;
  double lo_x = x_[cell];
  double hi_x = x_[hi];
  double x = lo_x + (hi_x - lo_x) * (u - f_[cell]) / (f_[hi] - f_[cell]);
  const double h = hi_x - lo_x;
  for (int it_n = 0; it_n < 60; ++it_n) {
    const double r = hermite(cell, x) - u;
    if (r == 0.0) break;
    if (r > 0.0) hi_x = x; else lo_x = x;
    // Derivative of the Hermite cubic.
    const double t = (x - x_[cell]) / h;
    const double d = ((6 * t * t - 6 * t) * f_[cell] + (3 * t * t - 4 * t + 1) * h * slope_[cell] +
                      (-6 * t * t + 6 * t) * f_[cell + 1] + (3 * t * t - 2 * t) * h * slope_[cell + 1]) /
                     h;
    double next = d > 0.0 ? x - r / d : 0.5 * (lo_x + hi_x);
    if (!(next > lo_x && next < hi_x)) next = 0.5 * (lo_x + hi_x);
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, x)) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

const InverseCdfTable& InverseCdfTable::shared() {
  static const InverseCdfTable table;
  return table;
}

SampleSet sample(std::size_t n, std::uint64_t seed, bool symmetric) {
  SampleSet s = make_set(n, seed, symmetric ? "mwright-sym-1/3" : "mwright-1/3");
  const InverseCdfTable& table = InverseCdfTable::shared();
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    double x = table.quantile(uniform(rng));
    if (symmetric && (rng() >> 63) != 0) x = -x;
    s.values.push_back(x);
  }
  return s;
}

SampleSet sample_exponential(std::size_t n, std::uint64_t seed) {
  SampleSet s = make_set(n, seed, "exp(1)");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) s.values.push_back(-std::log1p(-uniform(rng)));
  return s;
}

SampleSet sample_gaussian(std::size_t n, std::uint64_t seed, double variance) {
  if (!(variance > 0.0)) throw DomainError("sample_gaussian: variance must be positive");
  SampleSet s = make_set(n, seed, "normal(0," + std::to_string(variance).substr(0, 6) + ")");
  std::mt19937_64 rng(seed);
  const double sigma = std::sqrt(variance);
  while (s.values.size() < n) {
    // Box-Muller on (0, 1] x [0, 1).
    const double u1 = 1.0 - uniform(rng);
    const double u2 = uniform(rng);
    const double r = sigma * std::sqrt(-2.0 * std::log(u1));
    s.values.push_back(r * std::cos(2.0 * constants::kPi * u2));
    if (s.values.size() < n) s.values.push_back(r * std::sin(2.0 * constants::kPi * u2));
  }
  return s;
}

}  // namespace wright_stein::mwright
