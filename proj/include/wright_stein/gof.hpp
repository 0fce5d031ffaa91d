#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wright_stein/mwright.hpp"
#include "wright_stein/stein.hpp"

namespace wright_stein::gof {

inline constexpr double kAcceptThreshold = 4.0;
inline constexpr double kRejectThreshold = 5.0;
/// Sign-balance z-scores: below the first is consistent, above the second rejects.
inline constexpr double kSignAcceptZ = 3.0;
inline constexpr double kSignRejectZ = 5.0;
inline constexpr std::size_t kMinSamples = 100;
inline constexpr int kMaxTestFunctions = 16;
inline constexpr double kClippedWarningFraction = 0.01;

/// The fixed family, in order:
///   cos(x), sin(x), cos(2x), sin(2x), cos(3x), sin(3x),
///   exp(-|x|), exp(-2|x|), exp(-3|x|), 1/(1+x^2), atan(x),
///   exp(-x^2), x/(1+x^2), tanh(x), cos(4x), sin(4x).
/// On the half-line exp(-j|x|) is exp(-jx). Throws DomainError unless 1 <= k <= 16.
std::vector<stein::TestFunction> default_test_functions(int k);

/// Lookup by label ("cos(2x)") or short name: const, cos, sin, cos2, sin2,
/// cos3, sin3, exp, exp2, exp3, rational, atan, gauss, xrational, tanh,
/// cos4, sin4. "const" is h = 1, outside the default family.
stein::TestFunction named_test_function(const std::string& name);

/// Short names accepted by named_test_function: "const", then the family in order.
std::vector<std::string> test_function_names();

enum class Verdict { consistent, rejected, inconclusive };

const char* to_string(Verdict v);

struct FunctionDiscrepancy {
  std::string label;
  double mean = 0.0;
  double std_error = 0.0;
  /// |mean| / std_error.
  double standardized = 0.0;
};

struct SignBalance {
  std::size_t nonnegative = 0;
  double fraction_nonneg = 0.0;
  /// (#{X >= 0} - n/2) / (sqrt(n)/2).
  double z_score = 0.0;
};

/// Empirical means of (A f_h)(X_i) over a sample.
///
/// rejected if max_standardized > 5 or (symmetric) |sign z| > 5;
/// consistent if max_standardized < 4 and (symmetric) |sign z| < 3;
/// inconclusive otherwise.
struct DiscrepancyReport {
  bool symmetric = false;
  std::vector<FunctionDiscrepancy> per_function;
  double max_standardized = 0.0;
  std::size_t n = 0;
  /// Samples beyond the solver grid, where (A f_h)(x) = h(x) - E h(Y) is used.
  std::size_t clipped = 0;
  bool clipped_warning = false;
  /// Samples exactly at 0 (symmetric mode), evaluated on the 0+ branch.
  std::size_t at_zero = 0;
  std::optional<SignBalance> sign_balance;
  Verdict verdict = Verdict::inconclusive;

  void write_table(std::ostream& out) const;
  void write_csv(std::ostream& out) const;
};

/// Half-line statistic; samples must be non-negative, n >= 100.
DiscrepancyReport discrepancy(const mwright::SampleSet& samples,
                              const std::vector<stein::TestFunction>& hs,
                              const stein::SolverConfig& cfg = {});

/// Symmetric statistic with the sign-balance check; n >= 100.
DiscrepancyReport discrepancy_sym(const mwright::SampleSet& samples,
                                  const std::vector<stein::TestFunction>& hs,
                                  const stein::SolverConfig& cfg = {});

/// Verdict from the two statistics (pass z = nullopt in half-line mode).
Verdict decide(double max_standardized, std::optional<double> sign_z);

}  // namespace wright_stein::gof
