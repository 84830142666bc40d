#pragma once

#include "tridesign/roots.hpp"

#include <array>

namespace tridesign {

/// The three inner products a < b < c of a candidate code, each exact or
/// enclosed by an isolating interval.
struct InnerProductTriple {
  std::array<IsolatingInterval, 3> roots;

  static InnerProductTriple from_values(const Rational& a, const Rational& b, const Rational& c);

  const IsolatingInterval& a() const { return roots[0]; }
  const IsolatingInterval& b() const { return roots[1]; }
  const IsolatingInterval& c() const { return roots[2]; }

  bool is_exact() const { return roots[0].is_exact() && roots[1].is_exact() && roots[2].is_exact(); }
  /// Throws std::logic_error unless is_exact().
  std::array<Rational, 3> values() const;
  std::array<RationalInterval, 3> enclosures() const;
  Rational max_width() const;
  /// Every non-exact root refined to width <= bound.
  InnerProductTriple refined(const Rational& bound) const;
};

}  // namespace tridesign
