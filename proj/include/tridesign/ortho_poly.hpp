#pragma once

#include "tridesign/interval.hpp"
#include "tridesign/polynomial.hpp"
#include "tridesign/triple.hpp"

#include <array>
#include <vector>

namespace tridesign {

/// Jacobi polynomial P_i^{(alpha,beta)} scaled so that P_i(1) = 1.
/// Requires alpha > -1 so that the value at 1 is nonzero.
Polynomial jacobi_polynomial(unsigned i, const Rational& alpha, const Rational& beta);

/// The adjacent Jacobi polynomial of the sphere S^{n-1}:
/// (alpha, beta) = ((n-1)/2, (n-3)/2), normalized at 1.
Polynomial jacobi_polynomial(unsigned i, int n);

/// Gegenbauer polynomial P_k^{(n)}: Jacobi with alpha = beta = (n-3)/2,
/// normalized at 1. n = 2 gives the Chebyshev polynomials T_k.
Polynomial gegenbauer_polynomial(unsigned k, int n);

struct GegenbauerCoefficients {
  int dimension = 0;
  std::vector<Rational> coefficients;  // f_0 .. f_k

  const Rational& f0() const { return coefficients.at(0); }
};

/// f = sum_i f_i P_i^{(n)}, exactly.
GegenbauerCoefficients gegenbauer_expand(const Polynomial& f, int n);

/// P_k(t) P_{k-1}(s) - P_k(s) P_{k-1}(t) with P_i = jacobi_polynomial(i, n).
Polynomial levenshtein_polynomial(unsigned k, int n, const Rational& s);

/// The cardinality L_5(n, s) attained by a 3-distance 5-design with largest
/// inner product s. Throws std::domain_error("bound undefined at s") at a pole.
Rational levenshtein_bound_l5(int n, const Rational& s);

/// Levenshtein quadrature f_0 = f(1)/M + sum rho_i f(alpha_i), degree <= 5.
struct QuadratureRule {
  int dimension = 0;
  Rational cardinality;
  std::array<RationalInterval, 3> nodes;
  std::array<RationalInterval, 3> weights;

  bool is_exact() const;
};

/// Weights from the moment equations for t^0, t^1, t^2, then verified on
/// t^3..t^5. Throws std::domain_error when verification fails or a weight is
/// not positive. Interval nodes give interval weights (containment checks).
QuadratureRule quadrature_weights(int n, const Rational& cardinality, const InnerProductTriple& nodes);

}  // namespace tridesign
