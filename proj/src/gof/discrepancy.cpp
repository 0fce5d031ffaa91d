#include <cmath>
#include <limits>
#include <sstream>

#include "wright_stein/errors.hpp"
#include "wright_stein/gof.hpp"
#include "wright_stein/kernels.hpp"

namespace wright_stein::gof {

namespace {

void check_samples(const mwright::SampleSet& samples, const std::vector<stein::TestFunction>& hs,
                   bool symmetric) {
  if (samples.size() < kMinSamples) {
    std::ostringstream os;
    os << "discrepancy: need at least " << kMinSamples << " samples, got " << samples.size();
    throw DomainError(os.str());
  }
  if (hs.empty()) throw DomainError("discrepancy: no test functions");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double x = samples.values[i];
    if (!std::isfinite(x) || (!symmetric && x < 0.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "discrepancy: sample " << i << " = " << x
         << (symmetric ? " is not finite" : " is not a non-negative number");
      throw DomainError(os.str());
    }
  }
}

// Mean and standard error of v in index order.
FunctionDiscrepancy summarize(const std::string& label, const std::vector<double>& v) {
  const double n = static_cast<double>(v.size());
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  FunctionDiscrepancy d;
  d.label = label;
  d.mean = mean;
  d.std_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  if (d.std_error > 0.0)
    d.standardized = std::abs(mean) / d.std_error;
  else
    d.standardized = mean == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return d;
}

// The half-line branch of a solution as a kernel table. The grid is uniform
// by construction of the default grids.
struct Table {
  std::vector<double> f, f_prime, f_double_prime;
  double step = 0.0;

  kernels::UniformTable view() const {
    kernels::UniformTable t;
    t.x0 = 0.0;
    t.step = step;
    t.n = f.size();
    t.f = f.data();
    t.f_prime = f_prime.data();
    t.f_double_prime = f_double_prime.data();
    return t;
  }
};

Table positive_table(const stein::SteinSolution& sol, std::size_t zero) {
  Table t;
  t.f.assign(sol.f.begin() + zero, sol.f.end());
  t.f_prime.assign(sol.f_prime.begin() + zero, sol.f_prime.end());
  t.f_double_prime.assign(sol.f_double_prime.begin() + zero, sol.f_double_prime.end());
  t.step = sol.grid[zero + 1] - sol.grid[zero];
  return t;
}

// F(s) = f(-s) for s >= 0, with the 0- limits at s = 0.
Table negative_table(const stein::SteinSolution& sol, std::size_t zero) {
  Table t;
  t.f.push_back(sol.f_zero_minus);
  t.f_prime.push_back(-sol.f_prime_zero_minus);
  t.f_double_prime.push_back(sol.f2_zero_minus_ode);
  for (std::size_t i = zero; i-- > 0;) {
    t.f.push_back(sol.f[i]);
    t.f_prime.push_back(-sol.f_prime[i]);
    t.f_double_prime.push_back(sol.f_double_prime[i]);
  }
  t.step = sol.grid[zero] - sol.grid[zero - 1];
  return t;
}

// Evaluates (A f)(x) at each sample in place: table lookups for |x| within
// the grid, the exact h(x) - centre beyond it.
void evaluate(const Table& table, const stein::TestFunction& h, double centre, double x_max,
              const std::vector<double>& s, std::vector<double>& out) {
  out.resize(s.size());
  kernels::stein_operator_batch(table.view(), s.data(), s.size(), out.data());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > x_max) out[i] = h(s[i]) - centre;
}

Verdict finish(DiscrepancyReport& r) {
  r.max_standardized = 0.0;
  for (const auto& d : r.per_function) r.max_standardized = std::max(r.max_standardized, d.standardized);
  r.clipped_warning = static_cast<double>(r.clipped) > kClippedWarningFraction * static_cast<double>(r.n);
  std::optional<double> z;
  if (r.sign_balance) z = r.sign_balance->z_score;
  return decide(r.max_standardized, z);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent:
      return "consistent";
    case Verdict::rejected:
      return "rejected";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict decide(double max_standardized, std::optional<double> sign_z) {
  const double z = sign_z ? std::abs(*sign_z) : 0.0;
  if (max_standardized > kRejectThreshold || z > kSignRejectZ) return Verdict::rejected;
  if (max_standardized < kAcceptThreshold && z < kSignAcceptZ) return Verdict::consistent;
  return Verdict::inconclusive;
}

DiscrepancyReport discrepancy(const mwright::SampleSet& samples,
                              const std::vector<stein::TestFunction>& hs,
                              const stein::SolverConfig& cfg) {
  check_samples(samples, hs, false);
  DiscrepancyReport r;
  r.n = samples.size();
  const std::vector<double> grid = stein::default_grid();
  const double x_max = grid.back();
  for (double x : samples.values)
    if (x > x_max) ++r.clipped;

  std::vector<double> values;
  for (const auto& h : hs) {
    const stein::SteinSolution sol = stein::solve_stein(h, grid, cfg);
    evaluate(positive_table(sol, 0), h, sol.expectation_h, x_max, samples.values, values);
    r.per_function.push_back(summarize(h.label, values));
  }
  r.verdict = finish(r);
  return r;
}

DiscrepancyReport discrepancy_sym(const mwright::SampleSet& samples,
                                  const std::vector<stein::TestFunction>& hs,
                                  const stein::SolverConfig& cfg) {
  check_samples(samples, hs, true);
  DiscrepancyReport r;
  r.symmetric = true;
  r.n = samples.size();

  SignBalance sb;
  for (double x : samples.values)
    if (x >= 0.0) ++sb.nonnegative;
  const double n = static_cast<double>(r.n);
  sb.fraction_nonneg = static_cast<double>(sb.nonnegative) / n;
  sb.z_score = (static_cast<double>(sb.nonnegative) - n / 2.0) / (std::sqrt(n) / 2.0);
  r.sign_balance = sb;

  const std::vector<double> grid = stein::default_symmetric_grid();
  const std::size_t zero = grid.size() / 2;
  const double x_max = grid.back();

  std::vector<double> pos, neg;
  std::vector<std::size_t> pos_index, neg_index;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double x = samples.values[i];
    if (x == 0.0) ++r.at_zero;
    if (std::abs(x) > x_max) ++r.clipped;
    if (x >= 0.0) {
      pos.push_back(x);
      pos_index.push_back(i);
    } else {
      neg.push_back(-x);
      neg_index.push_back(i);
    }
  }

  std::vector<double> values(samples.size()), part;
  for (const auto& h : hs) {
    const stein::SteinSolution sol = stein::solve_stein_sym(h, grid, cfg);
    evaluate(positive_table(sol, zero), h, sol.expectation_h, x_max, pos, part);
    for (std::size_t k = 0; k < pos.size(); ++k) values[pos_index[k]] = part[k];
    // Beyond the grid the negative branch equals h(x) - E h(-Y) with x = -s.
    stein::TestFunction reflected{[&h](double s) { return h(-s); }, h.sup_norm, h.label, h.even};
    evaluate(negative_table(sol, zero), reflected, sol.expectation_h_neg, x_max, neg, part);
    for (std::size_t k = 0; k < neg.size(); ++k) values[neg_index[k]] = part[k];
    r.per_function.push_back(summarize(h.label, values));
  }
  r.verdict = finish(r);
  return r;
}

}  // namespace wright_stein::gof
