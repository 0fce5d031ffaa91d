#include <cmath>
#include <iterator>
#include <sstream>

#include "wright_stein/constants.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/gof.hpp"

namespace wright_stein::gof {

using stein::TestFunction;

namespace {

struct Entry {
  const char* name;
  TestFunction (*make)();
};

TestFunction trig(bool cosine, int j) {
  std::ostringstream label;
  label << (cosine ? "cos(" : "sin(");
  if (j != 1) label << j;
  label << "x)";
  const double a = j;
  if (cosine) return {[a](double x) { return std::cos(a * x); }, 1.0, label.str(), true};
  return {[a](double x) { return std::sin(a * x); }, 1.0, label.str(), false};
}

TestFunction exp_abs(int j) {
  std::ostringstream label;
  label << "exp(-";
  if (j != 1) label << j;
  label << "|x|)";
  const double a = j;
  return {[a](double x) { return std::exp(-a * std::abs(x)); }, 1.0, label.str(), true};
}

const Entry kFamily[] = {
    {"cos", [] { return trig(true, 1); }},
    {"sin", [] { return trig(false, 1); }},
    {"cos2", [] { return trig(true, 2); }},
    {"sin2", [] { return trig(false, 2); }},
    {"cos3", [] { return trig(true, 3); }},
    {"sin3", [] { return trig(false, 3); }},
    {"exp", [] { return exp_abs(1); }},
    {"exp2", [] { return exp_abs(2); }},
    {"exp3", [] { return exp_abs(3); }},
    {"rational",
     [] {
       return TestFunction{[](double x) { return 1.0 / (1.0 + x * x); }, 1.0, "1/(1+x^2)", true};
     }},
    {"atan",
     [] {
       return TestFunction{[](double x) { return std::atan(x); }, constants::kPi / 2, "atan(x)",
                           false};
     }},
    {"gauss",
     [] { return TestFunction{[](double x) { return std::exp(-x * x); }, 1.0, "exp(-x^2)", true}; }},
    {"xrational",
     [] {
       return TestFunction{[](double x) { return x / (1.0 + x * x); }, 0.5, "x/(1+x^2)", false};
     }},
    {"tanh",
     [] { return TestFunction{[](double x) { return std::tanh(x); }, 1.0, "tanh(x)", false}; }},
    {"cos4", [] { return trig(true, 4); }},
    {"sin4", [] { return trig(false, 4); }},
};

static_assert(std::size(kFamily) == kMaxTestFunctions);

}  // namespace

std::vector<TestFunction> default_test_functions(int k) {
  if (k < 1 || k > kMaxTestFunctions) {
    std::ostringstream os;
    os << "default_test_functions: k = " << k << " outside [1, " << kMaxTestFunctions << "]";
    throw DomainError(os.str());
  }
  std::vector<TestFunction> out;
  for (int i = 0; i < k; ++i) out.push_back(kFamily[i].make());
  return out;
}

TestFunction named_test_function(const std::string& name) {
  if (name == "const") return {[](double) { return 1.0; }, 1.0, "const", true};
  for (const Entry& e : kFamily) {
    TestFunction h = e.make();
    if (name == e.name || name == h.label) return h;
  }
  throw DomainError("unknown test function '" + name + "'");
}

std::vector<std::string> test_function_names() {
  std::vector<std::string> out{"const"};
  for (const Entry& e : kFamily) out.emplace_back(e.name);
  return out;
}

}  // namespace wright_stein::gof
