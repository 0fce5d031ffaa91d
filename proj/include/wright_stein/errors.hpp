#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wright_stein {

// Argument outside the mathematical domain of the operation (x < 0 for Airy,
// non-positive gamma argument, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument inside the domain but outside the range where the implementation
// can deliver its accuracy contract.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Adaptive quadrature gave up before meeting its tolerance. The best estimate
// is kept so callers can decide whether it is good enough.
class ToleranceNotMet : public std::runtime_error {
 public:
  ToleranceNotMet(const std::string& what, double value, double error_estimate)
      : std::runtime_error(what), value_(value), error_estimate_(error_estimate) {}

  double value() const noexcept { return value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double value_;
  double error_estimate_;
};

// The integrand returned NaN.
class NanIntegrand : public std::runtime_error {
 public:
  explicit NanIntegrand(double abscissa);

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

// A Stein solution failed its own residual check.
class SolverAccuracyError : public std::runtime_error {
 public:
  SolverAccuracyError(const std::string& what, double residual, double worst_x)
      : std::runtime_error(what), residual_(residual), worst_x_(worst_x) {}

  double residual() const noexcept { return residual_; }
  double worst_x() const noexcept { return worst_x_; }

 private:
  double residual_;
  double worst_x_;
};

// Malformed input file; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wright_stein
