#pragma once

#include "tridesign/interval.hpp"

#include <array>

namespace tridesign {

/// (X, Y, Z): how many points sit at inner product a, b, c from any fixed point.
/// Components are exact (point intervals) or certified enclosures.
struct DistanceDistribution {
  std::array<RationalInterval, 3> counts;

  bool is_exact() const { return counts[0].is_point() && counts[1].is_point() && counts[2].is_point(); }
  const RationalInterval& x() const { return counts[0]; }
  const RationalInterval& y() const { return counts[1]; }
  const RationalInterval& z() const { return counts[2]; }
  /// Throws std::logic_error unless is_exact().
  std::array<Rational, 3> values() const;
};

}  // namespace tridesign
