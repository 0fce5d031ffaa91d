#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "wright_stein/errors.hpp"
#include "wright_stein/numerics.hpp"

namespace wright_stein {

namespace {

std::string describe_abscissa(double x) {
  std::ostringstream os;
  os.precision(17);
  os << "integrand returned NaN at x = " << x;
  return os.str();
}

}  // namespace

NanIntegrand::NanIntegrand(double abscissa)
    : std::runtime_error(describe_abscissa(abscissa)), abscissa_(abscissa) {}

namespace numerics {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525683982, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for the odd-indexed Kronrod nodes.
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Segment& other) const { return error < other.error; }
};

double evaluate(const Integrand& f, double x) {
  const double y = f(x);
  if (std::isnan(y)) throw NanIntegrand(x);
  return y;
}

Segment kronrod21(const Integrand& f, double a, double b, long& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_center = evaluate(f, center);

  double kronrod = f_center * kKronrodWeights[10];
  double gauss = 0.0;
  double abs_sum = std::abs(kronrod);
  std::array<double, 10> f_left{};
  std::array<double, 10> f_right{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    f_left[j] = evaluate(f, center - dx);
    f_right[j] = evaluate(f, center + dx);
    const double pair = f_left[j] + f_right[j];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::abs(f_left[j]) + std::abs(f_right[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  evaluations += 21;

  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[10] * std::abs(f_center - mean);
  for (int j = 0; j < 10; ++j) {
    asc += kKronrodWeights[j] * (std::abs(f_left[j] - mean) + std::abs(f_right[j] - mean));
  }

  const double result = kronrod * half;
  const double resabs = abs_sum * std::abs(half);
  const double resasc = asc * std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  return {a, b, result, err};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("QuadratureConfig: tolerances must be positive");
  }
  if (!(truncation_point > 0.0)) {
    throw DomainError("QuadratureConfig: truncation_point must be positive");
  }
  if (max_subdivisions < 1) {
    throw DomainError("QuadratureConfig: max_subdivisions must be at least 1");
  }
}

double QuadratureConfig::tolerance_for(double value) const {
  return std::max(abs_tol, rel_tol * std::abs(value));
}

IntegralResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a <= b)) throw DomainError("integrate: lower limit exceeds upper limit");
  if (a == b) return {};

  long evaluations = 0;
  std::priority_queue<Segment> heap;
  Segment first = kronrod21(f, a, b, evaluations);
  double total = first.value;
  double total_error = first.error;
  heap.push(first);

  while (total_error > cfg.tolerance_for(total)) {
    if (static_cast<int>(heap.size()) >= cfg.max_subdivisions) {
      throw ToleranceNotMet("integrate: tolerance not met within max_subdivisions", total,
                            total_error);
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      throw ToleranceNotMet("integrate: interval cannot be subdivided further", total,
                            total_error);
    }
    heap.pop();
    const Segment left = kronrod21(f, worst.a, mid, evaluations);
    const Segment right = kronrod21(f, mid, worst.b, evaluations);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the leaves; the running totals drift after many updates.
  IntegralResult out;
  out.evaluations = evaluations;
  double compensation = 0.0;
  while (!heap.empty()) {
    const Segment& s = heap.top();
    const double y = s.value - compensation;
    const double t = out.value + y;
    compensation = (t - out.value) - y;
    out.value = t;
    out.error_estimate += s.error;
    heap.pop();
  }
  return out;
}

IntegralResult integrate_semi_infinite(const Integrand& f, double a, const TailBound& tail,
                                       const QuadratureConfig& cfg) {
  cfg.validate();
  const double cutoff = cfg.truncation_point;
  if (a >= cutoff) {
    return {0.0, std::abs(tail(a)), 0};
  }
  IntegralResult r = integrate(f, a, cutoff, cfg);
  r.error_estimate += std::abs(tail(cutoff));
  if (r.error_estimate > cfg.tolerance_for(r.value)) {
    throw ToleranceNotMet("integrate_semi_infinite: tail beyond truncation point exceeds tolerance",
                          r.value, r.error_estimate);
  }
  return r;
}

TailBound exponential_tail(double scale, double rate) {
  if (!(rate > 0.0)) throw DomainError("exponential_tail: rate must be positive");
  return [scale, rate](double t) { return std::abs(scale) * std::exp(-rate * t) / rate; };
}

}  // namespace numerics
}  // namespace wright_stein
