#include "tridesign/prefilter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tridesign {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double v) { return std::nextafter(v, -kInf); }
double up(double v) { return std::nextafter(v, kInf); }

// Horner in double with the standard a-priori error bound gamma_6 * p~(|x|);
// the factor 1e-14 leaves a wide margin over gamma_6 ~ 6.7e-16.
int certified_sign(const std::array<double, 4>& co, double x) {
  const double v = ((co[0] * x + co[1]) * x + co[2]) * x + co[3];
  const double ax = std::fabs(x);
  const double mag = ((std::fabs(co[0]) * ax + std::fabs(co[1])) * ax + std::fabs(co[2])) * ax + std::fabs(co[3]);
  const double err = mag * 1e-14;
  if (v > err) {
    return 1;
  }
  if (v < -err) {
    return -1;
  }
  return 0;
}

// Three real roots of A t^3 + B t^2 + C t + D by the trigonometric method, Newton-polished.
bool approximate_roots(const std::array<double, 4>& co, std::array<long double, 3>& out) {
  const long double a = co[0];
  const long double b = co[1] / a;
  const long double c = co[2] / a;
  const long double d = co[3] / a;
  const long double p = c - b * b / 3;
  const long double q = 2 * b * b * b / 27 - b * c / 3 + d;
  if (!(p < 0)) {
    return false;
  }
  const long double m = 2 * std::sqrt(-p / 3);
  long double arg = 3 * q / (p * m);
  if (arg > 1 || arg < -1) {
    return false;
  }
  const long double theta = std::acos(arg) / 3;
  const long double pi = std::numbers::pi_v<long double>;
  for (int k = 0; k < 3; ++k) {
    long double x = m * std::cos(theta - 2 * pi * k / 3) - b / 3;
    for (int it = 0; it < 3; ++it) {
      const long double f = ((a * x + co[1]) * x + co[2]) * x + co[3];
      const long double df = (3 * a * x + 2 * co[1]) * x + co[2];
      if (df == 0) {
        break;
      }
      x -= f / df;
    }
    out[static_cast<std::size_t>(k)] = x;
  }
  std::sort(out.begin(), out.end());
  return true;
}

bool enclose_root(const std::array<double, 4>& co, long double approx, FloatInterval& out) {
  const double x = static_cast<double>(approx);
  const double scale = std::max(std::fabs(x), 1e-6);
  for (int k = 0; k < 4; ++k) {
    const double delta = std::ldexp(scale, -46 + 6 * k);
    const double lo = x - delta;
    const double hi = x + delta;
    const int slo = certified_sign(co, lo);
    const int shi = certified_sign(co, hi);
    if (slo != 0 && shi != 0 && slo != shi) {
      out = {lo, hi};
      return true;
    }
  }
  return false;
}

FloatInterval magnitude(const FloatInterval& x) { return x.lo > 0 ? x : FloatInterval{-x.hi, -x.lo}; }

}  // namespace

bool FloatInterval::contains_nonnegative_integer() const {
  if (hi < 0) {
    return false;
  }
  return std::ceil(std::max(lo, 0.0)) <= hi;
}

FloatInterval operator+(const FloatInterval& a, const FloatInterval& b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }

FloatInterval operator-(const FloatInterval& a, const FloatInterval& b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }

FloatInterval operator*(const FloatInterval& a, const FloatInterval& b) {
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  return {down(std::min({p1, p2, p3, p4})), up(std::max({p1, p2, p3, p4}))};
}

FloatInterval operator/(const FloatInterval& a, const FloatInterval& b) {
  const FloatInterval inv{down(1.0 / b.hi), up(1.0 / b.lo)};
  return a * inv;
}

bool prefilter_rejects(int n, std::int64_t M) {
  PrefilterTrace trace;
  return prefilter_rejects(n, M, trace);
}

bool prefilter_rejects(int n, std::int64_t M, PrefilterTrace& trace) {
  trace = {};
  const std::int64_t nn = n;
  if (n < 3 || M <= nn * (nn + 1) || M >= (std::int64_t{1} << 40) || 2 * M == nn * (nn + 3)) {
    return false;
  }
  // Coefficients are integers below 2^53 and therefore exact in double.
  const std::array<double, 4> co{static_cast<double>((nn + 2) * (nn * (nn + 3) - 2 * M)),
                                 static_cast<double>(-nn * (nn + 2) * (nn - 1)),
                                 static_cast<double>(6 * M - 5 * nn * nn - 7 * nn), static_cast<double>(nn * (nn - 1))};
  std::array<long double, 3> approx{};
  if (!approximate_roots(co, approx)) {
    return false;
  }
  auto& r = trace.roots;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!enclose_root(co, approx[i], r[i])) {
      return false;
    }
  }
  if (!(r[0].hi < r[1].lo && r[1].hi < r[2].lo && r[0].lo >= -1.0 && r[2].hi < 1.0)) {
    return false;
  }
  trace.certified_roots = true;
  // |a| > |c| > |b| > 0
  if (r[0].hi >= 0 || r[1].contains_zero() || r[2].lo <= 0) {
    return false;
  }
  const FloatInterval abs_a = magnitude(r[0]);
  const FloatInterval abs_b = magnitude(r[1]);
  const FloatInterval abs_c = magnitude(r[2]);
  if (!(abs_a.lo > abs_c.hi && abs_c.lo > abs_b.hi)) {
    return false;
  }
  const FloatInterval m0 = FloatInterval::point(static_cast<double>(M - 1));
  const double mn = static_cast<double>(M) / static_cast<double>(n);
  const FloatInterval m2 = FloatInterval{down(mn), up(mn)} - FloatInterval::point(1.0);
  // Lagrange solution of the t^0, t^1, t^2 moment equations (t^1 right-hand side is -1).
  auto weight = [&](const FloatInterval& x, const FloatInterval& y, const FloatInterval& z) {
    return (m2 + (y + z) + (y * z) * m0) / ((x - y) * (x - z));
  };
  trace.distribution = {weight(r[0], r[1], r[2]), weight(r[1], r[0], r[2]), weight(r[2], r[0], r[1])};
  for (const auto& d : trace.distribution) {
    if (!d.contains_nonnegative_integer()) {
      return true;
    }
  }
  return false;
}

}  // namespace tridesign
