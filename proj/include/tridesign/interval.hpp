#pragma once

#include "tridesign/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace tridesign {

/// Closed interval [lo, hi] with rational endpoints. A point interval (lo == hi)
/// represents an exact value. Arithmetic is inclusion-monotone.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(const Rational& value) : lo(value), hi(value) {}  // NOLINT(google-explicit-constructor)
  RationalInterval(int value) : lo(value), hi(value) {}               // NOLINT(google-explicit-constructor)
  RationalInterval(Rational low, Rational high) : lo(std::move(low)), hi(std::move(high)) {}

  static RationalInterval point(const Rational& v) { return {v, v}; }

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool positive() const { return lo > 0; }

  /// The integers inside the interval, as [first, last] (empty when first > last).
  std::pair<Integer, Integer> integer_span() const { return {ceil_of(lo), floor_of(hi)}; }
  bool contains_integer() const {
    auto [first, last] = integer_span();
    return first <= last;
  }
  bool contains_nonnegative_integer() const {
    auto first = ceil_of(std::max(lo, Rational(0)));
    return first <= floor_of(hi) && hi >= 0;
  }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    if (a.is_point() && b.is_point()) {
      return point(a.lo * b.lo);
    }
    const Rational p1 = a.lo * b.lo;
    const Rational p2 = a.lo * b.hi;
    const Rational p3 = a.hi * b.lo;
    const Rational p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    if (b.contains_zero()) {
      throw std::domain_error("interval division by an interval containing zero");
    }
    if (b.is_point()) {
      const Rational inv = 1 / b.lo;
      return a * point(inv);
    }
    return a * RationalInterval{1 / b.hi, 1 / b.lo};
  }
  friend RationalInterval operator*(const RationalInterval& a, const Rational& s) { return a * point(s); }
  friend RationalInterval operator+(const RationalInterval& a, const Rational& s) { return a + point(s); }

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

inline RationalInterval power(const RationalInterval& x, unsigned k) {
  RationalInterval acc = RationalInterval::point(1);
  for (unsigned i = 0; i < k; ++i) {
    acc = acc * x;
  }
  return acc;
}

}  // namespace tridesign
