#include "wright_stein/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wright_stein/errors.hpp"
#include "wright_stein/gof.hpp"
#include "wright_stein/mwright.hpp"
#include "wright_stein/specfun.hpp"
#include "wright_stein/stein.hpp"

namespace wright_stein::cli {

namespace {

double parse_number(const std::string& text) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
    throw DomainError("not a finite number: '" + text + "'");
  return v;
}

struct Options {
  std::string output;

  std::string eval_function;
  std::string eval_grid;
  std::string eval_beta;

  std::string solve_h = "cos";
  bool solve_symmetric = false;
  std::string solve_grid;

  std::size_t sample_n = 0;
  std::uint64_t sample_seed = 1;
  bool sample_symmetric = false;
  std::string sample_law = "mwright";
  double sample_variance = 2.0;

  std::string gof_input;
  bool gof_symmetric = false;
  int gof_k = gof::kMaxTestFunctions;
  bool gof_csv = false;

  std::string plot_betas = "0,1/7,1/3,1/2";
  std::string plot_grid = "-5:5:0.01";

  // Filled by prepare() from the strings above.
  std::vector<double> xs;
  std::optional<double> beta;
  std::vector<std::pair<std::string, double>> betas;
  numerics::QuadratureConfig quadrature = stein::SolverConfig{}.quadrature;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses every textual argument of the chosen verb up front, so malformed
// values are usage errors rather than numerical failures.
void prepare(Options& o, const std::string& verb) {
  try {
    o.quadrature = quadrature_from_environment(o.quadrature);
    if (verb == "eval") {
      o.xs = parse_grid(o.eval_grid);
      if (!o.eval_beta.empty()) o.beta = parse_real(o.eval_beta);
    } else if (verb == "solve") {
      if (!o.solve_grid.empty()) o.xs = parse_grid(o.solve_grid);
    } else if (verb == "plotdata") {
      o.xs = parse_grid(o.plot_grid);
      std::stringstream list(o.plot_betas);
      std::string item;
      while (std::getline(list, item, ',')) o.betas.emplace_back(item, parse_real(item));
      if (o.betas.empty()) throw DomainError("no betas given");
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string format_x(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

int cmd_eval(const Options& o, std::ostream& out) {
  const std::vector<double>& xs = o.xs;
  const std::string& fn = o.eval_function;
  const std::optional<double>& beta = o.beta;
  if (beta && (fn == "ai" || fn == "bi" || fn == "gi"))
    throw DomainError("--beta does not apply to " + fn);

  std::function<double(double)> f;
  if (fn == "ai") {
    f = [](double x) { return specfun::airy(x).ai; };
  } else if (fn == "bi") {
    f = [](double x) { return specfun::airy(x).bi; };
  } else if (fn == "gi") {
    f = [](double x) { return specfun::scorer_gi(x); };
  } else if (fn == "ml") {
    const double b = beta.value_or(1.0 / 3.0);
    f = [b](double x) { return specfun::mittag_leffler(b, x); };
  } else if (fn == "mwright" || fn == "mwright-sym") {
    const mwright::WrightParameter p(beta.value_or(1.0 / 3.0));
    if (fn == "mwright")
      f = [p](double x) { return mwright::density(p, x); };
    else
      f = [p](double x) { return mwright::density_sym(p, x); };
  } else {
    throw DomainError("unknown function '" + fn + "'");
  }

  std::ostringstream body;
  body.precision(17);
  body << "x,value\n";
  for (double x : xs) {
    double v = 0.0;
    try {
      v = f(x);
    } catch (const std::exception& e) {
      throw DomainError("x = " + format_x(x) + ": " + e.what());
    }
    body << x << ',' << v << '\n';
  }
  out << body.str();
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const stein::TestFunction h = gof::named_test_function(o.solve_h);
  stein::SolverConfig cfg;
  cfg.quadrature = o.quadrature;
  std::vector<double> grid = o.xs;
  if (grid.empty())
    grid = o.solve_symmetric ? stein::default_symmetric_grid() : stein::default_grid();
  const stein::SteinSolution sol =
      o.solve_symmetric ? stein::solve_stein_sym(h, grid, cfg) : stein::solve_stein(h, grid, cfg);
  stein::write_csv(out, sol, h.label);
  return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  mwright::SampleSet s;
  if (o.sample_law == "mwright") {
    s = mwright::sample(o.sample_n, o.sample_seed, o.sample_symmetric);
  } else if (o.sample_symmetric) {
    throw DomainError("--symmetric only applies to --law mwright");
  } else if (o.sample_law == "exp") {
    s = mwright::sample_exponential(o.sample_n, o.sample_seed);
  } else {
    s = mwright::sample_gaussian(o.sample_n, o.sample_seed, o.sample_variance);
  }
  mwright::write_csv(out, s);
  return kExitOk;
}

int cmd_gof(const Options& o, std::ostream& out) {
  std::ifstream in(o.gof_input);
  if (!in) throw UsageError("cannot open '" + o.gof_input + "'");
  const mwright::SampleSet samples = mwright::read_csv(in);
  const auto hs = gof::default_test_functions(o.gof_k);
  stein::SolverConfig cfg;
  cfg.quadrature = o.quadrature;
  const gof::DiscrepancyReport r =
      o.gof_symmetric ? gof::discrepancy_sym(samples, hs, cfg) : gof::discrepancy(samples, hs, cfg);
  if (o.gof_csv)
    r.write_csv(out);
  else
    r.write_table(out);
  switch (r.verdict) {
    case gof::Verdict::consistent:
      return kExitOk;
    case gof::Verdict::rejected:
      return kExitFailure;
    case gof::Verdict::inconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_plotdata(const Options& o, std::ostream& out) {
  std::vector<std::string> labels;
  std::vector<mwright::WrightParameter> params;
  for (const auto& [label, b] : o.betas) {
    if (!(b >= 0.0 && b <= 0.5))
      throw DomainError("plotdata: beta = " + label + " outside [0, 1/2]");
    labels.push_back(label);
    params.emplace_back(b);
  }
  const std::vector<double>& xs = o.xs;

  std::ostringstream body;
  body.precision(17);
  body << 'x';
  for (const auto& l : labels) body << ",beta=" << l;
  body << '\n';
  for (double x : xs) {
    body << x;
    for (const auto& p : params) body << ',' << mwright::density_sym(p, x);
    body << '\n';
  }
  out << body.str();
  return kExitOk;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3 || spec.back() == ':')
    throw DomainError("grid must be start:stop:step, got '" + spec + "'");
  const double start = parse_real(parts[0]);
  const double stop = parse_real(parts[1]);
  const double step = parse_real(parts[2]);
  if (!(step > 0.0)) throw DomainError("grid step must be positive");
  if (stop < start) throw DomainError("grid stop is below start");
  const double span = (stop - start) / step;
  if (span > 1e8) throw DomainError("grid has too many points");
  // Tolerate rounding in the point count, e.g. -5:5:0.01.
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> xs(count);
  const double n = static_cast<double>(count - 1);
  const double last = start + n * step;
  if (count > 1 && std::abs(last - stop) <= 1e-9 * std::max(1.0, std::abs(stop))) {
    // Interpolating between the end points keeps -a:a:h grids exactly symmetric.
    for (std::size_t i = 0; i < count; ++i) {
      const double k = static_cast<double>(i);
      xs[i] = (start * (n - k) + stop * k) / n;
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) xs[i] = start + static_cast<double>(i) * step;
  }
  return xs;
}

double parse_real(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_number(text);
  const double p = parse_number(text.substr(0, slash));
  const double q = parse_number(text.substr(slash + 1));
  if (q == 0.0) throw DomainError("zero denominator in '" + text + "'");
  return p / q;
}

numerics::QuadratureConfig quadrature_from_environment(numerics::QuadratureConfig base) {
  if (const char* env = std::getenv("WRIGHT_STEIN_TRUNC")) {
    double t = 0.0;
    try {
      t = parse_number(env);
    } catch (const DomainError&) {
      throw DomainError(std::string("WRIGHT_STEIN_TRUNC: not a number: '") + env + "'");
    }
    if (!(t > 0.0)) throw DomainError("WRIGHT_STEIN_TRUNC must be positive");
    base.truncation_point = t;
  }
  return base;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"M-Wright special functions, Stein solvers and goodness-of-fit tests",
               "wright-stein"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", o.output, "Write data to this file instead of standard output");

  auto* eval = app.add_subcommand("eval", "Tabulate a special function: CSV x,value");
  eval->add_option("function", o.eval_function, "ai, bi, gi, ml, mwright or mwright-sym")
      ->required()
      ->check(CLI::IsMember({"ai", "bi", "gi", "ml", "mwright", "mwright-sym"}));
  eval->add_option("grid,--grid", o.eval_grid, "start:stop:step")->required();
  eval->add_option("--beta", o.eval_beta, "Index for ml (default 1/3) and mwright (default 1/3)");

  auto* solve = app.add_subcommand("solve", "Solve the Stein equation for a test function: CSV");
  // --h names the test function, so help is --help only here.
  solve->set_help_flag("--help", "Print this help message and exit");
  solve->add_option("--h", o.solve_h, "Test function name")
      ->check(CLI::IsMember(gof::test_function_names()));
  solve->add_flag("--symmetric", o.solve_symmetric, "Symmetric equation on the whole line");
  solve->add_option("--grid", o.solve_grid,
                    "start:stop:step (default 400 points on [0,12], mirrored if symmetric)");

  auto* sample = app.add_subcommand("sample", "Draw samples: one value per line");
  sample->add_option("n", o.sample_n, "Number of draws")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.sample_seed, "Seed");
  sample->add_flag("--symmetric", o.sample_symmetric, "Symmetrised law");
  sample->add_option("--law", o.sample_law, "mwright (default), exp or normal")
      ->check(CLI::IsMember({"mwright", "exp", "normal"}));
  sample->add_option("--variance", o.sample_variance, "Variance for --law normal")
      ->check(CLI::PositiveNumber);

  auto* gof_cmd = app.add_subcommand("gof", "Stein-discrepancy goodness-of-fit test");
  gof_cmd->add_option("input", o.gof_input, "Sample CSV")->required();
  gof_cmd->add_flag("--symmetric", o.gof_symmetric, "Test against the symmetrised law");
  gof_cmd->add_option("-k", o.gof_k, "Number of test functions")
      ->check(CLI::Range(1, gof::kMaxTestFunctions));
  gof_cmd->add_flag("--csv", o.gof_csv, "CSV report instead of a table");

  auto* plot = app.add_subcommand("plotdata", "Symmetrised densities for several betas: CSV");
  plot->add_option("--betas", o.plot_betas, "Comma-separated betas in [0, 1/2]");
  plot->add_option("--grid", o.plot_grid, "start:stop:step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    prepare(o, app.get_subcommands().front()->get_name());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << "error: cannot write '" << o.output << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, *sink);
    if (solve->parsed()) return cmd_solve(o, *sink);
    if (sample->parsed()) return cmd_sample(o, *sink);
    if (gof_cmd->parsed()) return cmd_gof(o, *sink);
    return cmd_plotdata(o, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace wright_stein::cli
