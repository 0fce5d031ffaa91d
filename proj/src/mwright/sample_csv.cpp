#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include "wright_stein/errors.hpp"
#include "wright_stein/mwright.hpp"

namespace wright_stein::mwright {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Pulls key=value pairs out of the header comment, if present.
void parse_header(const std::string& line, SampleSet& s) {
  std::istringstream is(line.substr(1));
  std::string token;
  while (is >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "generator") {
      s.generator = value;
    } else if (key == "seed") {
      std::from_chars(value.data(), value.data() + value.size(), s.seed);
    }
  }
}

}  // namespace

void write_csv(std::ostream& out, const SampleSet& samples) {
  out << "# generator=" << samples.generator << " seed=" << samples.seed
      << " n=" << samples.size() << '\n';
  std::ostringstream line;
  line.precision(17);
  for (double v : samples.values) {
    line.str({});
    line << v << '\n';
    out << line.str();
  }
}

SampleSet read_csv(std::istream& in) {
  SampleSet s;
  s.generator = "file";
  std::string raw;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!seen_header) parse_header(line, s);
      seen_header = true;
      continue;
    }
    double v = 0.0;
    const char* begin = line.data();
    const char* end = begin + line.size();
    // Accept an explicit leading '+', which from_chars does not.
    if (*begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
      throw ParseError("expected one finite number, got '" + line + "'", line_no);
    }
    s.values.push_back(v);
  }
  return s;
}

}  // namespace wright_stein::mwright
