#pragma once

#include "tridesign/interval.hpp"
#include "tridesign/polynomial.hpp"

#include <memory>
#include <vector>

namespace tridesign {

/// Certified enclosure of one real root of `poly`. Either degenerate
/// (lo == hi, the exact root) or an open interval (lo, hi) in which the
/// square-free polynomial `poly` has exactly one root and changes sign.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  std::shared_ptr<const Polynomial> poly;

  static IsolatingInterval exact(const Rational& r);

  bool is_exact() const { return lo == hi; }
  const Rational& value() const;
  Rational width() const { return hi - lo; }
  RationalInterval enclosure() const { return {lo, hi}; }
  double approx() const { return to_double((lo + hi) / 2); }
};

/// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& square_free);
  int variations(const Rational& x) const;
  /// Number of distinct roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }
  const Polynomial& base() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

/// One interval per distinct real root of p in [lo, hi], sorted ascending.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);
/// All real roots, using a Cauchy bound for the domain.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p);

/// Bisects until hi - lo <= width_bound (exact roots are returned unchanged).
IsolatingInterval refine_interval(const IsolatingInterval& iv, const Rational& width_bound);

/// Distinct rational roots in ascending order.
std::vector<Rational> rational_roots(const Polynomial& p);

/// Upgrades to an exact interval when the isolated root is rational.
IsolatingInterval try_exact(const IsolatingInterval& iv);

/// Exact comparison of two algebraic numbers given by isolating intervals:
/// -1, 0 or 1.
int compare_roots(const IsolatingInterval& x, const IsolatingInterval& y);

/// Enclosure of -x.
IsolatingInterval negate(const IsolatingInterval& x);

/// Smallest-denominator rational in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Upper bound on the absolute value of every real root.
Rational cauchy_bound(const Polynomial& p);

}  // namespace tridesign
