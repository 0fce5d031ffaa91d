#include <algorithm>
#include <cmath>
#include <sstream>

#include "wright_stein/constants.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/specfun.hpp"
#include "wright_stein/stein.hpp"

namespace wright_stein::stein {

using namespace constants;

namespace {

constexpr double kTailDecades = 40.0;

double zeta_of(double x) { return specfun::airy_zeta(x / kCbrt3); }

[[noreturn]] void overflow_at(double x) {
  std::ostringstream os;
  os.precision(17);
  os << "Stein solver: non-finite intermediate at x = " << x;
  throw OverflowError(os.str());
}

}  // namespace

HalfLineGreen::HalfLineGreen(std::function<double(double)> rhs, double rhs_sup,
                             std::vector<double> nodes, const numerics::QuadratureConfig& cfg)
    : rhs_(std::move(rhs)), rhs_sup_(std::abs(rhs_sup)), nodes_(std::move(nodes)), cfg_(cfg) {
  if (nodes_.empty()) throw DomainError("HalfLineGreen: no nodes");
  if (!std::isfinite(rhs_sup_)) throw DomainError("HalfLineGreen: right-hand side bound is not finite");
  if (nodes_.front() < 0.0 || !std::is_sorted(nodes_.begin(), nodes_.end()))
    throw DomainError("HalfLineGreen: nodes must be sorted and non-negative");
  if (nodes_.front() != 0.0) nodes_.insert(nodes_.begin(), 0.0);
  const std::size_t n = nodes_.size();
  zeta_.resize(n);
  p_.assign(n, 0.0);
  q_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) zeta_[i] = zeta_of(nodes_[i]);

  for (std::size_t i = 1; i < n; ++i) {
    p_[i] = std::exp(zeta_[i - 1] - zeta_[i]) * p_[i - 1] +
            p_cell(nodes_[i - 1], nodes_[i], zeta_[i]);
    if (!std::isfinite(p_[i])) overflow_at(nodes_[i]);
  }
  q_[n - 1] = q_tail(nodes_[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    q_[i] = q_cell(nodes_[i], nodes_[i + 1], zeta_[i]) +
            std::exp(zeta_[i] - zeta_[i + 1]) * q_[i + 1];
    if (!std::isfinite(q_[i])) overflow_at(nodes_[i]);
  }
}

double HalfLineGreen::p_cell(double a, double b, double zeta_b) const {
  if (a == b) return 0.0;
  return numerics::integrate(
             [&](double t) {
               const specfun::ScaledAiry s = specfun::airy_scaled(t / kCbrt3);
               return s.bi * std::exp(s.zeta - zeta_b) * rhs_(t);
             },
             a, b, cfg_)
      .value;
}

double HalfLineGreen::q_cell(double a, double b, double zeta_a) const {
  if (a == b) return 0.0;
  return numerics::integrate(
             [&](double t) {
               const specfun::ScaledAiry s = specfun::airy_scaled(t / kCbrt3);
               return s.ai * std::exp(zeta_a - s.zeta) * rhs_(t);
             },
             a, b, cfg_)
      .value;
}

// Integral over [x, infinity). The weight exp(zeta(x/c) - zeta(t/c)) has
// dropped below e^{-40} by `end`; beyond it the tail bound applies.
double HalfLineGreen::q_tail(double x) const {
  const double zx = zeta_of(x);
  const double end = std::max(cfg_.truncation_point,
                              kCbrt3 * std::cbrt(std::pow(1.5 * (zx + kTailDecades), 2.0)));
  return q_cell(x, end, zx);
}

HalfLineGreen::Value HalfLineGreen::combine(double x, double p, double q) const {
  const specfun::ScaledAiry s = specfun::airy_scaled(x / kCbrt3);
  Value v;
  v.f = -kCbrt3 * kPi * (s.ai * p + s.bi * q);
  v.f_prime = -kPi * (s.ai_prime * p + s.bi_prime * q);
  if (!std::isfinite(v.f) || !std::isfinite(v.f_prime)) overflow_at(x);
  return v;
}

HalfLineGreen::Value HalfLineGreen::at_node(std::size_t i) const {
  return combine(nodes_[i], p_[i], q_[i]);
}

HalfLineGreen::Value HalfLineGreen::at(double x) const {
  if (!(x >= 0.0 && x <= nodes_.back())) {
    std::ostringstream os;
    os << "HalfLineGreen: x = " << x << " outside [0, " << nodes_.back() << "]";
    throw DomainError(os.str());
  }
  // Cell [nodes_[i], nodes_[i+1]] containing x.
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  if (nodes_[i] == x) return at_node(i);
  const double zx = zeta_of(x);
  const double p = std::exp(zeta_[i] - zx) * p_[i] + p_cell(nodes_[i], x, zx);
  const double q = q_cell(x, nodes_[i + 1], zx) + std::exp(zx - zeta_[i + 1]) * q_[i + 1];
  return combine(x, p, q);
}

}  // namespace wright_stein::stein
