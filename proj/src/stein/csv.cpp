#include <cmath>
#include <ostream>

#include "wright_stein/stein.hpp"

namespace wright_stein::stein {

void write_csv(std::ostream& out, const SteinSolution& sol, const std::string& label) {
  const auto old_precision = out.precision(17);
  const BoundReport& b = sol.bound_report;
  out << "# kind=" << to_string(sol.kind) << '\n'
      << "# h=" << label << '\n'
      << "# expectation_h=" << sol.expectation_h << '\n';
  if (sol.kind == SolutionKind::symmetric) out << "# expectation_h_neg=" << sol.expectation_h_neg << '\n';
  out << "# residual_sup=" << sol.residual_sup << '\n';
  if (sol.kind == SolutionKind::half_line) {
    out << "# boundary_residual=" << sol.boundary_residual << '\n';
  } else {
    out << "# f_zero=" << sol.f_zero_plus << '\n'
        << "# f_prime_zero_plus=" << sol.f_prime_zero_plus << '\n'
        << "# f_prime_zero_minus=" << sol.f_prime_zero_minus << '\n'
        << "# f_double_prime_zero_plus=" << sol.f2_zero_plus_ode << '\n'
        << "# f_double_prime_zero_minus=" << sol.f2_zero_minus_ode << '\n'
        << "# f_double_prime_jump=" << sol.f2_zero_plus_ode - sol.f2_zero_minus_ode << '\n';
  }
  out << "# sup_f=" << b.sup_f << " bound_f=" << b.bound_f << '\n'
      << "# sup_f_prime=" << b.sup_f_prime << " bound_f_prime=" << b.bound_f_prime << '\n'
      << "# sup_f_double_prime=" << b.sup_f_double_prime
      << " bound_f_double_prime=" << b.bound_f_double_prime << '\n'
      << "# centered_sup=" << b.centered_sup << " (scanned supremum, a lower bound)\n"
      << "# bounds_satisfied=" << (b.all_satisfied ? "true" : "false") << '\n'
      << "x,f,f_prime,f_double_prime,residual\n";
  for (std::size_t i = 0; i < sol.grid.size(); ++i) {
    // + 0.0 prints a zero solution as 0 rather than -0.
    out << sol.grid[i] << ',' << sol.f[i] + 0.0 << ',' << sol.f_prime[i] + 0.0 << ','
        << sol.f_double_prime[i] + 0.0 << ',' << sol.residual[i] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace wright_stein::stein
