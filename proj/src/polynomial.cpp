#include "tridesign/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tridesign {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::identity() { return monomial(1, 1); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) {
    throw std::domain_error("leading coefficient of the zero polynomial");
  }
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

double Polynomial::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + to_double(*it);
  }
  return acc;
}

int Polynomial::sign_at(const Rational& t) const {
  const Rational v = (*this)(t);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) {
    return {};
  }
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * static_cast<long>(i);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> r = coeffs_;
  for (std::size_t i = 1; i < r.size(); i += 2) {
    r[i] = -r[i];
  }
  return Polynomial(std::move(r));
}

std::vector<Integer> Polynomial::integer_coefficients() const {
  Integer common_den = 1;
  for (const auto& c : coeffs_) {
    common_den = boost::multiprecision::lcm(common_den, denominator_of(c));
  }
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    out.push_back(numerator_of(c) * (common_den / denominator_of(c)));
    content = boost::multiprecision::gcd(content, out.back());
  }
  if (content == 0) {
    return out;
  }
  if (out.back() < 0) {
    content = -content;
  }
  for (auto& c : out) {
    c /= content;
  }
  return out;
}

Polynomial Polynomial::primitive() const {
  std::vector<Rational> coeffs;
  for (const auto& z : integer_coefficients()) {
    coeffs.emplace_back(z);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) {
    return *this;
  }
  return *this / leading();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) {
    c *= scalar;
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& scalar) {
  if (scalar == 0) {
    throw std::domain_error("polynomial division by zero scalar");
  }
  for (auto& c : coeffs_) {
    c /= scalar;
  }
  return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) {
      continue;
    }
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) {
        os << "-";
      }
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      os << tridesign::to_string(mag);
      if (i > 0) {
        os << "*";
      }
    }
    if (i >= 1) {
      os << var;
    }
    if (i >= 2) {
      os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) {
    return {Polynomial{}, a};
  }
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) {
      continue;
    }
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive();
  Polynomial y = b.primitive();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) {
    return p.primitive();
  }
  const Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.primitive();
}

}  // namespace tridesign
