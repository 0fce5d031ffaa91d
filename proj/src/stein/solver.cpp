#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wright_stein/constants.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/stein.hpp"

namespace wright_stein::stein {

using namespace constants;

namespace {

void validate_grid(const std::vector<double>& grid, bool symmetric) {
  if (grid.empty()) throw DomainError("Stein solver: empty grid");
  for (double x : grid)
    if (!std::isfinite(x)) throw DomainError("Stein solver: non-finite grid point");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw DomainError("Stein solver: grid must be sorted");
  if (!symmetric && grid.front() < 0.0)
    throw DomainError("Stein solver: half-line grid has negative points");
  const double extent = std::max(std::abs(grid.front()), std::abs(grid.back()));
  if (extent > kMaxSolverX) {
    std::ostringstream os;
    os << "Stein solver: grid extends to " << extent << ", beyond the supported " << kMaxSolverX;
    throw RangeError(os.str());
  }
  if (symmetric) {
    if (!std::binary_search(grid.begin(), grid.end(), 0.0))
      throw DomainError("symmetric Stein solver: grid must contain 0");
    if (grid.front() >= 0.0 || grid.back() <= 0.0)
      throw DomainError("symmetric Stein solver: grid needs points of both signs");
  }
}

// f'' of the half-line solution at x by differences of the analytic f',
// one-sided where the stencil would leave [0, x_max].
double fd_second(const HalfLineGreen& g, double x, double step) {
  if (x - step >= 0.0 && x + step <= g.x_max())
    return (g.at(x + step).f_prime - g.at(x - step).f_prime) / (2 * step);
  if (x - step < 0.0)
    return (-3 * g.at(x).f_prime + 4 * g.at(x + step).f_prime - g.at(x + 2 * step).f_prime) /
           (2 * step);
  return (3 * g.at(x).f_prime - 4 * g.at(x - step).f_prime + g.at(x - 2 * step).f_prime) /
         (2 * step);
}

struct Branch {
  std::vector<double> f, f_prime, f_double_prime, residual;
};

// Tabulates one half-line branch on `xs` (non-negative, sorted).
Branch tabulate(const HalfLineGreen& g, const std::vector<double>& xs, double step) {
  Branch b;
  for (double x : xs) {
    const HalfLineGreen::Value v = g.at(x);
    const double f2 = x * v.f / 3.0 + g.rhs(x);
    b.f.push_back(v.f);
    b.f_prime.push_back(v.f_prime);
    b.f_double_prime.push_back(f2);
    b.residual.push_back(std::abs(fd_second(g, x, step) - f2));
  }
  return b;
}

void check_residual(const SteinSolution& s, const SolverConfig& cfg) {
  std::size_t worst = 0;
  for (std::size_t i = 0; i < s.residual.size(); ++i)
    if (!(s.residual[i] <= s.residual[worst])) worst = i;
  if (!(s.residual_sup <= cfg.residual_tolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "Stein solver: residual " << s.residual_sup << " exceeds tolerance "
       << cfg.residual_tolerance;
    throw SolverAccuracyError(os.str(), s.residual_sup, s.grid[worst]);
  }
}

[[noreturn]] void invariant_failure(const std::string& what, double value, double x) {
  std::ostringstream os;
  os.precision(17);
  os << "Stein solver: " << what << " = " << value;
  throw SolverAccuracyError(os.str(), value, x);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<double> default_grid() {
  constexpr int n = 400;
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = 12.0 * i / (n - 1);
  return g;
}

std::vector<double> default_symmetric_grid() {
  const std::vector<double> half = default_grid();
  std::vector<double> g;
  g.reserve(2 * half.size() - 1);
  for (std::size_t i = half.size(); i-- > 1;) g.push_back(-half[i]);
  g.insert(g.end(), half.begin(), half.end());
  return g;
}

SteinSolution solve_stein(const TestFunction& h, const std::vector<double>& grid,
                          const SolverConfig& cfg) {
  validate_grid(grid, false);
  cfg.quadrature.validate();

  SteinSolution s;
  s.kind = SolutionKind::half_line;
  s.grid = grid;
  s.expectation_h = expectation_mwright(h, false, cfg.quadrature);
  s.expectation_h_neg = std::numeric_limits<double>::quiet_NaN();

  const double eh = s.expectation_h;
  auto green = std::make_shared<HalfLineGreen>([h, eh](double t) { return h(t) - eh; },
                                               h.sup_norm + std::abs(eh), grid, cfg.quadrature);
  Branch b = tabulate(*green, grid, cfg.fd_step);
  s.f = std::move(b.f);
  s.f_prime = std::move(b.f_prime);
  s.f_double_prime = std::move(b.f_double_prime);
  s.residual = std::move(b.residual);
  s.residual_sup = max_abs(s.residual);

  const HalfLineGreen::Value zero = green->at_node(0);
  s.f_zero_plus = s.f_zero_minus = zero.f;
  s.f_prime_zero_plus = s.f_prime_zero_minus = zero.f_prime;
  s.f2_zero_plus_ode = s.f2_zero_minus_ode = green->rhs(0.0);
  s.f2_zero_plus_fd = s.f2_zero_minus_fd = fd_second(*green, 0.0, cfg.fd_step);
  s.boundary_residual = zero.f_prime / kGammaTwoThirds - zero.f / kGammaOneThird;
  s.positive = green;
  s.bound_report = verify_bounds(s, h);

  check_residual(s, cfg);
  if (!(std::abs(s.boundary_residual) <= kBoundaryTolerance))
    invariant_failure("boundary identity residual", s.boundary_residual, 0.0);
  return s;
}

SteinSolution solve_stein_sym(const TestFunction& h, const std::vector<double>& grid,
                              const SolverConfig& cfg) {
  validate_grid(grid, true);
  cfg.quadrature.validate();

  SteinSolution s;
  s.kind = SolutionKind::symmetric;
  s.grid = grid;
  s.expectation_h = expectation_mwright(h, false, cfg.quadrature);
  s.expectation_h_neg = h.even ? s.expectation_h : expectation_mwright(h, true, cfg.quadrature);

  std::vector<double> pos, neg;
  for (double x : grid)
    if (x >= 0.0) pos.push_back(x);
  for (auto it = grid.rbegin(); it != grid.rend(); ++it)
    if (*it <= 0.0) neg.push_back(-*it);

  const double eh = s.expectation_h;
  const double ehn = s.expectation_h_neg;
  auto green_pos = std::make_shared<HalfLineGreen>(
      [h, eh](double t) { return h(t) - eh; }, h.sup_norm + std::abs(eh), pos, cfg.quadrature);
  std::shared_ptr<const HalfLineGreen> green_neg;
  if (h.even && neg == pos) {
    green_neg = green_pos;
  } else {
    green_neg = std::make_shared<HalfLineGreen>([h, ehn](double t) { return h(-t) - ehn; },
                                                h.sup_norm + std::abs(ehn), neg, cfg.quadrature);
  }

  const Branch bp = tabulate(*green_pos, pos, cfg.fd_step);
  const Branch bn = tabulate(*green_neg, neg, cfg.fd_step);
  // Negative grid points in ascending order are neg[] reversed; x = 0 takes
  // the 0+ branch, so the negative branch contributes only x < 0.
  const std::size_t n_neg = neg.size() - 1;
  for (std::size_t k = 0; k < n_neg; ++k) {
    const std::size_t j = n_neg - k;
    s.f.push_back(bn.f[j]);
    s.f_prime.push_back(-bn.f_prime[j]);
    s.f_double_prime.push_back(bn.f_double_prime[j]);
    s.residual.push_back(bn.residual[j]);
  }
  s.f.insert(s.f.end(), bp.f.begin(), bp.f.end());
  s.f_prime.insert(s.f_prime.end(), bp.f_prime.begin(), bp.f_prime.end());
  s.f_double_prime.insert(s.f_double_prime.end(), bp.f_double_prime.begin(),
                          bp.f_double_prime.end());
  s.residual.insert(s.residual.end(), bp.residual.begin(), bp.residual.end());
  s.residual_sup = std::max(max_abs(bp.residual), max_abs(bn.residual));

  const HalfLineGreen::Value zp = green_pos->at_node(0);
  const HalfLineGreen::Value zn = green_neg->at_node(0);
  s.f_zero_plus = zp.f;
  s.f_zero_minus = zn.f;
  s.f_prime_zero_plus = zp.f_prime;
  s.f_prime_zero_minus = -zn.f_prime;
  s.f2_zero_plus_ode = green_pos->rhs(0.0);
  s.f2_zero_minus_ode = green_neg->rhs(0.0);
  s.f2_zero_plus_fd = fd_second(*green_pos, 0.0, cfg.fd_step);
  s.f2_zero_minus_fd = fd_second(*green_neg, 0.0, cfg.fd_step);
  s.boundary_residual = std::numeric_limits<double>::quiet_NaN();
  s.positive = green_pos;
  s.negative = green_neg;
  s.bound_report = verify_bounds(s, h);

  check_residual(s, cfg);
  if (!(std::abs(s.f_zero_plus) <= kSymmetricZeroTolerance))
    invariant_failure("f(0+)", s.f_zero_plus, 0.0);
  if (!(std::abs(s.f_zero_minus) <= kSymmetricZeroTolerance))
    invariant_failure("f(0-)", s.f_zero_minus, 0.0);
  if (!(std::abs(s.f_prime_zero_plus) <= kBoundaryTolerance))
    invariant_failure("f'(0+)", s.f_prime_zero_plus, 0.0);
  if (!(std::abs(s.f_prime_zero_minus) <= kBoundaryTolerance))
    invariant_failure("f'(0-)", s.f_prime_zero_minus, 0.0);
  if (!(std::abs(s.f2_zero_plus_fd - s.f2_zero_plus_ode) <= kJumpTolerance))
    invariant_failure("f''(0+) mismatch", s.f2_zero_plus_fd - s.f2_zero_plus_ode, 0.0);
  if (!(std::abs(s.f2_zero_minus_fd - s.f2_zero_minus_ode) <= kJumpTolerance))
    invariant_failure("f''(0-) mismatch", s.f2_zero_minus_fd - s.f2_zero_minus_ode, 0.0);
  return s;
}

double SteinSolution::x_max() const {
  return std::max(std::abs(grid.front()), std::abs(grid.back()));
}

SteinSolution::Point SteinSolution::at(double x) const {
  Point p;
  if (x >= 0.0) {
    if (!positive) throw DomainError("SteinSolution::at: no solution for x >= 0");
    const HalfLineGreen::Value v = positive->at(x);
    p.f = v.f;
    p.f_prime = v.f_prime;
    p.f_double_prime = x * v.f / 3.0 + positive->rhs(x);
    return p;
  }
  if (!negative) throw DomainError("SteinSolution::at: no solution for x < 0");
  const HalfLineGreen::Value v = negative->at(-x);
  p.f = v.f;
  p.f_prime = -v.f_prime;
  p.f_double_prime = -x * v.f / 3.0 + negative->rhs(-x);
  return p;
}

}  // namespace wright_stein::stein
