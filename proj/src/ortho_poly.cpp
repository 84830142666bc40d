#include "tridesign/ortho_poly.hpp"

#include "tridesign/moments.hpp"

#include <stdexcept>

namespace tridesign {

namespace {

void require_dimension(int n) {
  if (n < 2) {
    throw std::invalid_argument("dimension must be at least 2, got " + std::to_string(n));
  }
}

// Standard (unnormalized) three-term recurrence for P_i^{(alpha,beta)}.
std::vector<Polynomial> jacobi_family(unsigned max_degree, const Rational& alpha, const Rational& beta) {
  std::vector<Polynomial> family;
  family.push_back(Polynomial::constant(1));
  if (max_degree == 0) {
    return family;
  }
  const Rational ab = alpha + beta;
  // P_1 = (alpha + 1) + (alpha + beta + 2)(t - 1)/2
  family.push_back(Polynomial{alpha + 1 - (ab + 2) / 2, (ab + 2) / 2});
  const Polynomial t = Polynomial::identity();
  for (unsigned k = 2; k <= max_degree; ++k) {
    const Rational kk = k;
    const Rational c = 2 * kk + ab;
    const Rational a1 = 2 * kk * (kk + ab) * (c - 2);
    const Rational a2 = (c - 1) * (alpha * alpha - beta * beta);
    const Rational a3 = (c - 2) * (c - 1) * c;
    const Rational a4 = 2 * (kk + alpha - 1) * (kk + beta - 1) * c;
    Polynomial next = (Polynomial::constant(a2) + t * a3) * family[k - 1] - family[k - 2] * a4;
    family.push_back(next / a1);
  }
  return family;
}

Polynomial normalized_at_one(const Polynomial& p) { return p / p(Rational(1)); }

}  // namespace

Polynomial jacobi_polynomial(unsigned i, const Rational& alpha, const Rational& beta) {
  if (alpha <= -1) {
    throw std::invalid_argument("jacobi_polynomial: alpha must exceed -1");
  }
  return normalized_at_one(jacobi_family(i, alpha, beta).back());
}

Polynomial jacobi_polynomial(unsigned i, int n) {
  require_dimension(n);
  return jacobi_polynomial(i, Rational(n - 1, 2), Rational(n - 3, 2));
}

Polynomial gegenbauer_polynomial(unsigned k, int n) {
  require_dimension(n);
  const Rational ab(n - 3, 2);
  return jacobi_polynomial(k, ab, ab);
}

GegenbauerCoefficients gegenbauer_expand(const Polynomial& f, int n) {
  require_dimension(n);
  GegenbauerCoefficients out{n, {}};
  if (f.is_zero()) {
    out.coefficients.push_back(0);
    return out;
  }
  const auto deg = static_cast<unsigned>(f.degree());
  const Rational ab(n - 3, 2);
  std::vector<Polynomial> basis = jacobi_family(deg, ab, ab);
  for (auto& p : basis) {
    p = normalized_at_one(p);
  }
  out.coefficients.assign(deg + 1, Rational(0));
  Polynomial rest = f;
  for (int k = static_cast<int>(deg); k >= 0 && !rest.is_zero(); --k) {
    const auto uk = static_cast<unsigned>(k);
    const Rational coeff = rest.coefficient(uk) / basis[uk].leading();
    out.coefficients[uk] = coeff;
    rest -= basis[uk] * coeff;
  }
  return out;
}

Polynomial levenshtein_polynomial(unsigned k, int n, const Rational& s) {
  if (k < 1) {
    throw std::invalid_argument("levenshtein_polynomial: k must be at least 1");
  }
  require_dimension(n);
  const Polynomial pk = jacobi_polynomial(k, n);
  const Polynomial pk1 = jacobi_polynomial(k - 1, n);
  return pk * pk1(s) - pk1 * pk(s);
}

Rational levenshtein_bound_l5(int n, const Rational& s) {
  require_dimension(n);
  const Rational nn = n;
  const Rational denom = 2 * s * (3 - (nn + 2) * s * s);
  if (denom == 0) {
    throw std::domain_error("bound undefined at s = " + to_string(s));
  }
  const Rational numer = nn * ((nn + 2) * (nn + 3) * s * s + 4 * (nn + 2) * s - nn + 1) * (1 - s);
  return numer / denom;
}

bool QuadratureRule::is_exact() const {
  for (const auto& w : weights) {
    if (!w.is_point()) {
      return false;
    }
  }
  return true;
}

QuadratureRule quadrature_weights(int n, const Rational& cardinality, const InnerProductTriple& nodes) {
  require_dimension(n);
  if (cardinality <= 0) {
    throw std::invalid_argument("quadrature_weights: cardinality must be positive");
  }
  QuadratureRule rule;
  rule.dimension = n;
  rule.cardinality = cardinality;
  rule.nodes = nodes.enclosures();
  if (rule.nodes[0].lo < -1 || rule.nodes[2].hi >= 1) {
    throw std::domain_error("quadrature nodes must lie in [-1, 1)");
  }
  const Rational tail = 1 / cardinality;
  std::array<RationalInterval, 6> rhs;
  for (unsigned i = 0; i < 6; ++i) {
    rhs[i] = RationalInterval(monomial_mean(i, n) - tail);
  }
  const auto w = solve_vandermonde<RationalInterval>(rule.nodes, std::span(rhs).first(3));
  std::copy(w.begin(), w.end(), rule.weights.begin());
  for (unsigned i = 3; i < 6; ++i) {
    const RationalInterval sum = weighted_power_sum<RationalInterval>(rule.nodes, rule.weights, i);
    if (!sum.contains(rhs[i].lo)) {
      throw std::domain_error("nodes are not Levenshtein nodes for (n, M) = (" + std::to_string(n) + ", " +
                              to_string(cardinality) + ")");
    }
  }
  for (const auto& wt : rule.weights) {
    if (!wt.positive()) {
      throw std::domain_error("nonpositive quadrature weight");
    }
  }
  return rule;
}

}  // namespace tridesign
