#pragma once

#include "tridesign/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace tridesign {

/// Mean of t^i over the unit sphere S^{n-1}, i.e. the constant term f_0 of the
/// Gegenbauer expansion of t^i: 0 for odd i, (i-1)!! / (n (n+2) ... (n+i-2)) for even i.
Rational monomial_mean(unsigned i, int n);

/// Solves sum_j w_j x_j^i = rhs_i for i = 0..k-1 (k = nodes.size()) by Lagrange
/// interpolation. Scalar needs +, -, *, / and construction from int.
/// Nodes must be pairwise distinct.
template <typename Scalar>
std::vector<Scalar> solve_vandermonde(std::span<const Scalar> nodes, std::span<const Scalar> rhs) {
  const std::size_t k = nodes.size();
  if (rhs.size() < k) {
    throw std::invalid_argument("solve_vandermonde: not enough moment equations");
  }
  std::vector<Scalar> weights;
  weights.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    // coefficients of prod_{m != j} (t - x_m), constant first
    std::vector<Scalar> poly{Scalar(1)};
    Scalar denom(1);
    for (std::size_t m = 0; m < k; ++m) {
      if (m == j) {
        continue;
      }
      std::vector<Scalar> next(poly.size() + 1, Scalar(0));
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] = next[d + 1] + poly[d];
        next[d] = next[d] - poly[d] * nodes[m];
      }
      poly = std::move(next);
      denom = denom * (nodes[j] - nodes[m]);
    }
    Scalar acc(0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      acc = acc + poly[d] * rhs[d];
    }
    weights.push_back(acc / denom);
  }
  return weights;
}

/// sum_j w_j x_j^i
template <typename Scalar>
Scalar weighted_power_sum(std::span<const Scalar> nodes, std::span<const Scalar> weights, unsigned i) {
  Scalar acc(0);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Scalar p(1);
    for (unsigned e = 0; e < i; ++e) {
      p = p * nodes[j];
    }
    acc = acc + weights[j] * p;
  }
  return acc;
}

}  // namespace tridesign
