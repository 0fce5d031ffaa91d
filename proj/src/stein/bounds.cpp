#include <algorithm>
#include <cmath>
#include <sstream>

#include "wright_stein/constants.hpp"
#include "wright_stein/specfun.hpp"
#include "wright_stein/stein.hpp"

namespace wright_stein::stein {

using namespace constants;

namespace {

constexpr double kScanExtent = 40.0;
constexpr double kScanStep = 0.005;

}  // namespace

BoundReport verify_bounds(const SteinSolution& sol, const TestFunction& h) {
  BoundReport r;
  for (std::size_t i = 0; i < sol.grid.size(); ++i) {
    const double x = sol.grid[i];
    const double centre = x < 0.0 ? sol.expectation_h_neg : sol.expectation_h;
    r.sup_f = std::max(r.sup_f, std::abs(sol.f[i]));
    r.sup_f_prime = std::max(r.sup_f_prime, std::abs(sol.f_prime[i]));
    r.sup_f_double_prime = std::max(r.sup_f_double_prime, std::abs(sol.f_double_prime[i]));
    r.centered_sup = std::max(r.centered_sup, std::abs(h(x) - centre));
  }
  // The solution depends on h over the whole half-line, not only on the grid.
  const double reach = std::max(sol.x_max(), kScanExtent);
  const int steps = static_cast<int>(std::ceil(reach / kScanStep));
  for (int i = 0; i <= steps; ++i) {
    const double x = reach * i / steps;
    r.centered_sup = std::max(r.centered_sup, std::abs(h(x) - sol.expectation_h));
    if (sol.kind == SolutionKind::symmetric)
      r.centered_sup = std::max(r.centered_sup, std::abs(h(-x) - sol.expectation_h_neg));
  }
  const specfun::ScorerNorms& n = specfun::scorer_gi_norms();
  r.bound_f = kCbrt9 * kPi * n.sup_gi * r.centered_sup;
  r.bound_f_prime = kCbrt3 * kPi * n.sup_gi_prime * r.centered_sup;
  r.bound_f_double_prime = (kPi * n.sup_x_gi / kCbrt9 + 1.0) * r.centered_sup;
  r.all_satisfied = r.sup_f <= r.bound_f && r.sup_f_prime <= r.bound_f_prime &&
                    r.sup_f_double_prime <= r.bound_f_double_prime;
  return r;
}

namespace {

void check_bounded(const char* name, double value, double x, DomainCheck& out) {
  if (std::isfinite(value) && std::abs(value) <= kBoundednessCeiling) return;
  std::ostringstream os;
  os.precision(17);
  os << name << " unbounded at x = " << x << " (value " << value << ")";
  out.reasons.push_back(os.str());
}

void check_boundary(SolutionKind kind, double f0, double f0_prime, DomainCheck& out) {
  std::ostringstream os;
  os.precision(17);
  if (kind == SolutionKind::half_line) {
    const double b = f0_prime / kGammaTwoThirds - f0 / kGammaOneThird;
    if (std::abs(b) <= kBoundaryTolerance) return;
    os << "boundary identity f'(0)/Gamma(2/3) - f(0)/Gamma(1/3) = " << b;
  } else {
    if (std::abs(f0) <= kSymmetricZeroTolerance) return;
    os << "f(0) = " << f0;
  }
  out.reasons.push_back(os.str());
}

}  // namespace

DomainCheck check_domain(const SteinSolution& sol) {
  DomainCheck out;
  for (std::size_t i = 0; i < sol.grid.size(); ++i) {
    check_bounded("f", sol.f[i], sol.grid[i], out);
    check_bounded("f'", sol.f_prime[i], sol.grid[i], out);
    check_bounded("f''", sol.f_double_prime[i], sol.grid[i], out);
  }
  check_boundary(sol.kind, sol.f_zero_plus, sol.f_prime_zero_plus, out);
  if (sol.kind == SolutionKind::symmetric)
    check_boundary(sol.kind, sol.f_zero_minus, sol.f_prime_zero_minus, out);
  out.member = out.reasons.empty();
  return out;
}

DomainCheck check_domain(const SmoothFunction& f, SolutionKind kind,
                         const std::vector<double>& grid) {
  DomainCheck out;
  for (double x : grid) {
    check_bounded("f", f.value(x), x, out);
    check_bounded("f'", f.first(x), x, out);
    check_bounded("f''", f.second(x), x, out);
  }
  check_boundary(kind, f.value(0.0), f.first(0.0), out);
  out.member = out.reasons.empty();
  return out;
}

}  // namespace wright_stein::stein
