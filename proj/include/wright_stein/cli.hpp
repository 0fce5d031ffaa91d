#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wright_stein/numerics.hpp"

namespace wright_stein::cli {

/// Exit statuses shared by every verb.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // domain/numerical error, or gof verdict "rejected"
  kExitUsage = 2,    // bad arguments or unparsable input
  kExitInconclusive = 3,
};

/// Parses "start:stop:step" (step > 0, start <= stop) into the points
/// start + i*step up to stop. When the step divides the span the points are
/// interpolated between the end points, so -a:a:h is exactly symmetric.
/// Throws DomainError.
std::vector<double> parse_grid(const std::string& spec);

/// A real number or a fraction "p/q". Throws DomainError.
double parse_real(const std::string& text);

/// Quadrature defaults with truncation_point taken from WRIGHT_STEIN_TRUNC
/// when set. Throws DomainError for an unusable value.
numerics::QuadratureConfig quadrature_from_environment(numerics::QuadratureConfig base);

/// Runs one command line (argv[0] is the program name). Data goes to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wright_stein::cli
