#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "wright_stein/constants.hpp"
#include "wright_stein/errors.hpp"
#include "wright_stein/specfun.hpp"

namespace wright_stein::specfun {

namespace {

using namespace constants;

constexpr double kTiny = 1e-18;

std::string at(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_non_negative(double x, const char* who) {
  if (!(x >= 0.0)) throw DomainError(std::string(who) + ": argument must be >= 0, got " + at(x));
}

// Maclaurin auxiliaries f, g and their derivatives:
//   f = sum 3^k (1/3)_k x^{3k} / (3k)!,   g = sum 3^k (2/3)_k x^{3k+1} / (3k+1)!
// generated by the recurrences a_k = a_{k-1} / ((3k-1) 3k), b_k = b_{k-1} / (3k (3k+1)).
struct Auxiliary {
  double f = 1.0;
  double fp = 0.0;
  double g = 0.0;
  double gp = 1.0;
};

Auxiliary maclaurin_auxiliary(double x) {
  Auxiliary out;
  out.g = x;
  if (x == 0.0) return out;
  const double x3 = x * x * x;
  double a = 1.0;  // a_k x^{3k}
  double b = x;    // b_k x^{3k+1}
  for (int k = 1; k < 400; ++k) {
    const double dk = 3.0 * k;
    a *= x3 / ((dk - 1.0) * dk);
    b *= x3 / (dk * (dk + 1.0));
    const double fp_term = dk * a / x;
    const double gp_term = (dk + 1.0) * b / x;
    out.f += a;
    out.g += b;
    out.fp += fp_term;
    out.gp += gp_term;
    if (a < kTiny * out.f && b < kTiny * out.g && fp_term < kTiny * out.fp &&
        gp_term < kTiny * out.gp) {
      break;
    }
  }
  return out;
}

// Debye-type coefficients of the large-argument expansions:
// u_k = (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k) u_{k-1},  v_k = -(6k+1)/(6k-1) u_k.
struct AsymptoticSums {
  double ai = 0.0;   // sum (-1)^k u_k zeta^{-k}
  double aip = 0.0;  // sum (-1)^k v_k zeta^{-k}
  double bi = 0.0;   // sum u_k zeta^{-k}
  double bip = 0.0;  // sum v_k zeta^{-k}
};

AsymptoticSums asymptotic_sums(double zeta) {
  AsymptoticSums s{1.0, 1.0, 1.0, 1.0};
  double u = 1.0;
  double power = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double dk = k;
    u *= (6.0 * dk - 5.0) * (6.0 * dk - 3.0) * (6.0 * dk - 1.0) / ((2.0 * dk - 1.0) * 216.0 * dk);
    power /= zeta;
    const double v = -(6.0 * dk + 1.0) / (6.0 * dk - 1.0) * u;
    const double tu = u * power;
    const double tv = v * power;
    const double magnitude = std::max(std::abs(tu), std::abs(tv));
    // Optimal truncation: stop before the divergent tail starts to grow.
    if (magnitude > previous) break;
    previous = magnitude;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    s.ai += sign * tu;
    s.aip += sign * tv;
    s.bi += tu;
    s.bip += tv;
    if (magnitude < 1e-17) break;
  }
  return s;
}

// Knot table for Ai on (kAiMaclaurinLimit, kAsymptoticSwitch]: values at
// x_j = 2 + j/4, generated by Taylor steps backwards from the asymptotic
// value at 8.5 (the direction in which Ai dominates Bi).
constexpr double kKnotStart = kAiMaclaurinLimit;
constexpr double kKnotStep = 0.25;
constexpr int kKnotCount = 27;  // 2.0 .. 8.5

// Taylor expansion of a solution of y'' = x y about x0, evaluated at x0 + h.
void taylor_step(double x0, double y0, double dy0, double h, double& y, double& dy) {
  // a_{n+2} = (x0 a_n + a_{n-1}) / ((n+2)(n+1))
  double a_prev = 0.0;  // a_{n-1}
  double a_n = y0;
  double a_next = dy0;  // a_{n+1}
  double hp = 1.0;      // h^n
  y = 0.0;
  dy = 0.0;
  int quiet = 0;
  for (int n = 0; n < 200; ++n) {
    const double term = a_n * hp;
    y += term;
    // derivative contribution of a_{n+1} h^{n+1} is (n+1) a_{n+1} h^n
    const double dterm = (n + 1) * a_next * hp;
    dy += dterm;
    const double a_next2 = (x0 * a_n + a_prev) / ((n + 2.0) * (n + 1.0));
    a_prev = a_n;
    a_n = a_next;
    a_next = a_next2;
    hp *= h;
    if (std::abs(term) <= 1e-19 * std::abs(y) && std::abs(dterm) <= 1e-19 * std::abs(dy)) {
      if (++quiet >= 3 && n > 8) break;
    } else {
      quiet = 0;
    }
  }
}

struct KnotTable {
  std::array<double, kKnotCount> ai{};
  std::array<double, kKnotCount> aip{};

  KnotTable() {
    const double top = kKnotStart + kKnotStep * (kKnotCount - 1);
    const ScaledAiry s = branch::asymptotic(top);
    const double decay = std::exp(-s.zeta);
    ai[kKnotCount - 1] = s.ai * decay;
    aip[kKnotCount - 1] = s.ai_prime * decay;
    constexpr int kSubsteps = 2;
    for (int j = kKnotCount - 1; j > 0; --j) {
      double y = ai[j];
      double dy = aip[j];
      double x = kKnotStart + kKnotStep * j;
      const double h = -kKnotStep / kSubsteps;
      for (int s_i = 0; s_i < kSubsteps; ++s_i) {
        double y1 = 0.0;
        double dy1 = 0.0;
        taylor_step(x, y, dy, h, y1, dy1);
        y = y1;
        dy = dy1;
        x += h;
      }
      ai[j - 1] = y;
      aip[j - 1] = dy;
    }
  }
};

const KnotTable& knot_table() {
  static const KnotTable table;
  return table;
}

}  // namespace

double airy_zeta(double x) { return 2.0 / 3.0 * x * std::sqrt(x); }

namespace branch {

ScaledAiry maclaurin(double x) {
  const Auxiliary aux = maclaurin_auxiliary(x);
  const double c1 = kAiryAi0;
  const double c2 = -kAiryAiPrime0;
  ScaledAiry s;
  s.zeta = airy_zeta(x);
  const double grow = std::exp(s.zeta);
  const double shrink = 1.0 / grow;
  s.ai = (c1 * aux.f - c2 * aux.g) * grow;
  s.ai_prime = (c1 * aux.fp - c2 * aux.gp) * grow;
  s.bi = kSqrt3 * (c1 * aux.f + c2 * aux.g) * shrink;
  s.bi_prime = kSqrt3 * (c1 * aux.fp + c2 * aux.gp) * shrink;
  return s;
}

ScaledAiry asymptotic(double x) {
  ScaledAiry s;
  s.zeta = airy_zeta(x);
  const AsymptoticSums sums = asymptotic_sums(s.zeta);
  const double q = std::sqrt(std::sqrt(x));  // x^{1/4}
  s.ai = sums.ai / (2.0 * kSqrtPi * q);
  s.ai_prime = -q * sums.aip / (2.0 * kSqrtPi);
  s.bi = sums.bi / (kSqrtPi * q);
  s.bi_prime = q * sums.bip / kSqrtPi;
  return s;
}

void ai_from_knots(double x, double& ai, double& ai_prime) {
  const KnotTable& table = knot_table();
  int j = static_cast<int>(std::lround((x - kKnotStart) / kKnotStep));
  if (j < 0) j = 0;
  if (j > kKnotCount - 1) j = kKnotCount - 1;
  const double x0 = kKnotStart + kKnotStep * j;
  taylor_step(x0, table.ai[j], table.aip[j], x - x0, ai, ai_prime);
}

}  // namespace branch

ScaledAiry airy_scaled(double x) {
  require_non_negative(x, "airy");
  if (x > kAsymptoticSwitch) return branch::asymptotic(x);
  ScaledAiry s = branch::maclaurin(x);
  if (x > kAiMaclaurinLimit) {
    double ai = 0.0;
    double aip = 0.0;
    branch::ai_from_knots(x, ai, aip);
    const double grow = std::exp(s.zeta);
    s.ai = ai * grow;
    s.ai_prime = aip * grow;
  }
  return s;
}

AiryValues airy(double x) {
  const ScaledAiry s = airy_scaled(x);
  const double grow = std::exp(s.zeta);
  AiryValues v;
  v.zeta = s.zeta;
  v.ai_scaled = s.ai;
  v.bi_scaled = s.bi;
  v.ai = s.ai / grow;
  v.ai_prime = s.ai_prime / grow;
  v.bi = s.bi * grow;
  v.bi_prime = s.bi_prime * grow;
  if (!std::isfinite(v.bi) || !std::isfinite(v.bi_prime)) {
    throw OverflowError("airy: Bi(x) overflows double at x = " + at(x) +
                        "; use airy_scaled for the scaled values");
  }
  return v;
}

numerics::TailBound airy_ai_tail(double amplitude, double scale) {
  if (!(scale > 0.0)) throw DomainError("airy_ai_tail: scale must be positive");
  // -Ai'(t) >= sqrt(t) Ai(t) for t > 0, hence int_u^inf Ai <= Ai(u)/sqrt(u);
  // int_0^inf Ai = 1/3 caps the bound near the origin.
  return [amplitude, scale](double t) {
    const double u = scale * std::max(t, 0.0);
    double bound = 1.0 / 3.0;
    if (u > 0.0) {
      const ScaledAiry s = airy_scaled(u);
      bound = std::min(bound, s.ai * std::exp(-s.zeta) / std::sqrt(u));
    }
    return std::abs(amplitude) * bound / scale;
  };
}

}  // namespace wright_stein::specfun
