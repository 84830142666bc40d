#include "tridesign/triple.hpp"

#include <stdexcept>

namespace tridesign {

InnerProductTriple InnerProductTriple::from_values(const Rational& a, const Rational& b, const Rational& c) {
  return {{IsolatingInterval::exact(a), IsolatingInterval::exact(b), IsolatingInterval::exact(c)}};
}

std::array<Rational, 3> InnerProductTriple::values() const {
  if (!is_exact()) {
    throw std::logic_error("inner products are not exact rationals");
  }
  return {roots[0].lo, roots[1].lo, roots[2].lo};
}

std::array<RationalInterval, 3> InnerProductTriple::enclosures() const {
  return {roots[0].enclosure(), roots[1].enclosure(), roots[2].enclosure()};
}

Rational InnerProductTriple::max_width() const {
  return std::max({roots[0].width(), roots[1].width(), roots[2].width()});
}

InnerProductTriple InnerProductTriple::refined(const Rational& bound) const {
  return {{refine_interval(roots[0], bound), refine_interval(roots[1], bound), refine_interval(roots[2], bound)}};
}

}  // namespace tridesign
