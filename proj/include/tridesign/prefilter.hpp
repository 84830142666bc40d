#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace tridesign {

/// Closed floating-point interval with outward rounding after every operation.
struct FloatInterval {
  double lo = 0.0;
  double hi = 0.0;

  static FloatInterval point(double v) { return {v, v}; }
  bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
  bool contains_nonnegative_integer() const;
};

FloatInterval operator+(const FloatInterval& a, const FloatInterval& b);
FloatInterval operator-(const FloatInterval& a, const FloatInterval& b);
FloatInterval operator*(const FloatInterval& a, const FloatInterval& b);
/// Requires 0 not in b.
FloatInterval operator/(const FloatInterval& a, const FloatInterval& b);

/// Fast certified screen for scan candidates. Returns true only when it is
/// proven that the cubic has three simple roots in [-1, 1) with the sign
/// pattern |a| > |c| > |b| > 0 and that some component of the distance
/// distribution is not a nonnegative integer, i.e. when the exact pipeline
/// would report RejectedNonIntegerDistribution. Requires M > n(n+1) and
/// M < 2^40.
bool prefilter_rejects(int n, std::int64_t M);

struct PrefilterTrace {
  bool certified_roots = false;
  std::array<FloatInterval, 3> roots{};
  std::array<FloatInterval, 3> distribution{};
};

/// Same decision as prefilter_rejects with intermediate enclosures.
bool prefilter_rejects(int n, std::int64_t M, PrefilterTrace& trace);

}  // namespace tridesign
