#include "tridesign/moments.hpp"

namespace tridesign {

Rational monomial_mean(unsigned i, int n) {
  if (i % 2 == 1) {
    return 0;
  }
  Rational acc = 1;
  for (unsigned j = 0; j < i / 2; ++j) {
    acc *= Rational(2 * static_cast<long>(j) + 1, n + 2 * static_cast<long>(j));
  }
  return acc;
}

}  // namespace tridesign
