#pragma once

#include "tridesign/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tridesign {

/// Univariate polynomial with exact rational coefficients, constant term first.
/// Trailing zeros are never stored; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  /// The polynomial t.
  static Polynomial identity();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;
  int sign_at(const Rational& t) const;

  Polynomial derivative() const;
  /// p(-t)
  Polynomial reflected() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;
  std::vector<Integer> integer_coefficients() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial& operator/=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest power first, e.g. "9*t^3 + 9*t^2 - t - 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Product of the distinct irreducible factors, in primitive form.
Polynomial square_free_part(const Polynomial& p);

}  // namespace tridesign
