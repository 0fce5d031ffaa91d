#include <iomanip>
#include <ostream>

#include "wright_stein/gof.hpp"

namespace wright_stein::gof {

void DiscrepancyReport::write_table(std::ostream& out) const {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "Stein discrepancy (" << (symmetric ? "symmetric" : "half-line") << "), n = " << n
      << '\n';
  out << std::left << std::setw(12) << "h" << std::right << std::setw(16) << "mean"
      << std::setw(16) << "std_error" << std::setw(14) << "standardized" << '\n';
  for (const auto& d : per_function) {
    out << std::left << std::setw(12) << d.label << std::right << std::scientific
        << std::setprecision(6) << std::setw(16) << d.mean << std::setw(16) << d.std_error
        << std::fixed << std::setprecision(3) << std::setw(14) << d.standardized << '\n';
  }
  out.flags(flags);
  out << std::setprecision(4);
  out << "max standardized: " << max_standardized << " (accept < " << kAcceptThreshold
      << ", reject > " << kRejectThreshold << ")\n";
  out << "clipped samples: " << clipped << (clipped_warning ? "  WARNING: more than 1%" : "")
      << '\n';
  if (sign_balance) {
    out << "samples at 0: " << at_zero << '\n';
    out << "sign balance: P(X >= 0) = " << sign_balance->fraction_nonneg
        << ", z = " << sign_balance->z_score << " (accept |z| < " << kSignAcceptZ
        << ", reject |z| > " << kSignRejectZ << ")\n";
  }
  out << "verdict: " << to_string(verdict) << '\n';
  out.precision(precision);
}

void DiscrepancyReport::write_csv(std::ostream& out) const {
  const auto precision = out.precision(17);
  out << "label,mean,std_error,standardized\n";
  for (const auto& d : per_function)
    out << d.label << ',' << d.mean << ',' << d.std_error << ',' << d.standardized
        << '\n';
  out << "# n=" << n << '\n' << "# clipped=" << clipped << '\n';
  if (clipped_warning) out << "# clipped_warning=true\n";
  if (sign_balance) {
    out << "# at_zero=" << at_zero << '\n'
        << "# sign_balance=" << sign_balance->fraction_nonneg << '\n'
        << "# sign_z=" << sign_balance->z_score << '\n';
  }
  out << "# max_standardized=" << max_standardized << '\n'
      << "# verdict=" << to_string(verdict) << '\n';
  out.precision(precision);
}

}  // namespace wright_stein::gof
