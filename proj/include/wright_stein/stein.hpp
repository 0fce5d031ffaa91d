#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "wright_stein/numerics.hpp"

namespace wright_stein::stein {

/// A bounded continuous test function h with a known bound on |h|.
struct TestFunction {
  std::function<double(double)> eval;
  double sup_norm = 0.0;
  std::string label;
  bool even = false;

  double operator()(double x) const { return eval(x); }
};

/// A function with its first two derivatives, for applying the operators.
struct SmoothFunction {
  std::function<double(double)> value;
  std::function<double(double)> first;
  std::function<double(double)> second;
};

/// Wraps f with five-point central-difference derivatives of step `step`.
SmoothFunction with_finite_differences(std::function<double(double)> f, double step = 1e-3);

/// (A f)(x) = f''(x) - (1/3) x f(x), x >= 0.
double stein_apply(const SmoothFunction& f, double x);

/// f''(x) - (1/3) |x| f(x).
double stein_apply_sym(const SmoothFunction& f, double x);

/// E[h(Y)] (or E[h(-Y)] when `negate`) for Y ~ M_{1/3}, by quadrature.
double expectation_mwright(const TestFunction& h, bool negate,
                           const numerics::QuadratureConfig& cfg = {});

/// Sup-norm bounds for a Stein solution against the Scorer-function constants.
struct BoundReport {
  double sup_f = 0.0;
  double sup_f_prime = 0.0;
  double sup_f_double_prime = 0.0;
  double bound_f = 0.0;
  double bound_f_prime = 0.0;
  double bound_f_double_prime = 0.0;
  /// Supremum of |h - E h(Y)| over the grid and a 0.005-step scan of [0, 40]
  /// (both signs when symmetric); a lower bound of the true sup-norm.
  double centered_sup = 0.0;
  bool all_satisfied = false;
};

enum class SolutionKind { half_line, symmetric };

const char* to_string(SolutionKind kind);

struct SolverConfig {
  numerics::QuadratureConfig quadrature{1e-14, 1e-12, 1000, 40.0};
  double residual_tolerance = 1e-6;
  /// Step of the finite differences of f' used for the residual check.
  double fd_step = 1e-4;
};

inline constexpr double kMaxSolverX = 20.0;

class HalfLineGreen;

/// Solution of a Stein equation tabulated on a grid.
///
/// f'' is taken from the equation itself; `residual` is the independent
/// check |f''_fd - w(x) f/3 - rhs(x)| with f''_fd a finite difference of the
/// analytic f'. Off-grid values are available through `at`.
struct SteinSolution {
  struct Point {
    double f = 0.0;
    double f_prime = 0.0;
    double f_double_prime = 0.0;
  };

  SolutionKind kind = SolutionKind::half_line;
  std::vector<double> grid;
  std::vector<double> f;
  std::vector<double> f_prime;
  std::vector<double> f_double_prime;
  std::vector<double> residual;
  double expectation_h = 0.0;
  /// E[h(-Y)]; NaN for half-line solutions, where h need not exist below 0.
  double expectation_h_neg = 0.0;
  double residual_sup = 0.0;
  BoundReport bound_report;

  /// Half-line: f'(0)/Gamma(2/3) - f(0)/Gamma(1/3).
  double boundary_residual = 0.0;

  /// Symmetric: one-sided values at 0 and the second-derivative limits,
  /// both from the equation (`*_ode`) and from one-sided differences of f'.
  double f_zero_plus = 0.0;
  double f_zero_minus = 0.0;
  double f_prime_zero_plus = 0.0;
  double f_prime_zero_minus = 0.0;
  double f2_zero_plus_ode = 0.0;
  double f2_zero_minus_ode = 0.0;
  double f2_zero_plus_fd = 0.0;
  double f2_zero_minus_fd = 0.0;

  /// Value and derivatives at any x covered by the solve (|x| <= grid extent;
  /// x = 0 of a symmetric solution returns the 0+ branch).
  Point at(double x) const;

  double x_max() const;

  std::shared_ptr<const HalfLineGreen> positive;
  std::shared_ptr<const HalfLineGreen> negative;
};

/// Half-line Stein solution for h on a sorted grid in [0, 20].
///
/// Throws SolverAccuracyError if the residual exceeds cfg.residual_tolerance,
/// OverflowError on non-finite intermediates, RangeError for grids past 20.
SteinSolution solve_stein(const TestFunction& h, const std::vector<double>& grid,
                          const SolverConfig& cfg = {});

/// Symmetric Stein solution; the grid must contain 0 and points of both signs.
SteinSolution solve_stein_sym(const TestFunction& h, const std::vector<double>& grid,
                              const SolverConfig& cfg = {});

/// 400 uniform points on [0, 12].
std::vector<double> default_grid();

/// The default half-line grid mirrored onto [-12, 12] (799 points, 0 included).
std::vector<double> default_symmetric_grid();

/// Bounds from the Scorer-function constants:
///   |f|   <= 3^{2/3} pi ||Gi||     ||h~||
///   |f'|  <= 3^{1/3} pi ||Gi'||    ||h~||
///   |f''| <= (3^{-2/3} pi sup|x Gi| + 1) ||h~||
BoundReport verify_bounds(const SteinSolution& sol, const TestFunction& h);

struct DomainCheck {
  bool member = false;
  std::vector<std::string> reasons;
};

/// Membership of the half-line domain (bounded f, f', f'' on the grid plus the
/// boundary identity within 1e-8) or of the symmetric domain (bounded, f(0) = 0).
DomainCheck check_domain(const SteinSolution& sol);
DomainCheck check_domain(const SmoothFunction& f, SolutionKind kind,
                         const std::vector<double>& grid);

inline constexpr double kBoundaryTolerance = 1e-8;
inline constexpr double kSymmetricZeroTolerance = 1e-10;
inline constexpr double kJumpTolerance = 1e-6;
inline constexpr double kBoundednessCeiling = 1e6;

/// Particular solution of q'' - k^2 x q = f(x), x >= 0:
///   q(x) = -(pi/a) [Ai(a x) int_0^x Bi(a t) f(t) dt + Bi(a x) int_x^inf Ai(a t) f(t) dt],
/// a = k^{2/3}.
double general_particular_solution(double k, const TestFunction& f, double x,
                                   const numerics::QuadratureConfig& cfg = {1e-14, 1e-12, 1000,
                                                                          40.0});

/// CSV with columns x,f,f_prime,f_double_prime,residual and '#' metadata rows.
void write_csv(std::ostream& out, const SteinSolution& sol, const std::string& label);

/// Green's-function representation of the bounded solution of
/// f'' - (1/3) x f = g on [0, x_max], with g bounded by `rhs_sup`.
///
/// Stores the exponentially scaled partial integrals
///   P(x) = e^{-zeta(x/c)} int_0^x Bi(t/c) g(t) dt,
///   Q(x) = e^{ zeta(x/c)} int_x^inf Ai(t/c) g(t) dt,    c = 3^{1/3},
/// accumulated cell by cell over the nodes.
class HalfLineGreen {
 public:
  HalfLineGreen(std::function<double(double)> rhs, double rhs_sup, std::vector<double> nodes,
                const numerics::QuadratureConfig& cfg);

  struct Value {
    double f = 0.0;
    double f_prime = 0.0;
  };

  Value at(double x) const;
  Value at_node(std::size_t i) const;
  double rhs(double x) const { return rhs_(x); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  double x_max() const noexcept { return nodes_.back(); }

 private:
  Value combine(double x, double p, double q) const;
  double p_cell(double a, double b, double zeta_b) const;
  double q_cell(double a, double b, double zeta_a) const;
  double q_tail(double x) const;

  std::function<double(double)> rhs_;
  double rhs_sup_;
  std::vector<double> nodes_;
  std::vector<double> zeta_;
  std::vector<double> p_;
  std::vector<double> q_;
  numerics::QuadratureConfig cfg_;
};

}  // namespace wright_stein::stein
