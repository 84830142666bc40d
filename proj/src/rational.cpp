#include "tridesign/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tridesign {

Integer floor_of(const Rational& r) {
  const Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) {
    q -= 1;
  }
  return q;
}

Integer ceil_of(const Rational& r) { return -floor_of(-r); }

std::string to_string(const Rational& r) { return r.str(); }
std::string to_string(const Integer& z) { return z.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char ch : s) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
      return false;
    }
  }
  return true;
}

std::string_view strip_sign(std::string_view s, bool& negative) {
  negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  return s;
}

// Digit strings are always decimal; GMP would read a leading 0 as octal.
Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') {
    digits.remove_prefix(1);
  }
  return Integer(std::string{digits});
}

}  // namespace

Integer parse_integer(std::string_view text) {
  bool negative = false;
  const std::string_view body = strip_sign(text, negative);
  if (!all_digits(body)) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  const Integer value = decimal_integer(body);
  return negative ? Integer(-value) : value;
}

bool is_rational_token(std::string_view text) {
  bool negative = false;
  std::string_view body = strip_sign(text, negative);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    return all_digits(body);
  }
  return all_digits(body.substr(0, slash)) && all_digits(body.substr(slash + 1));
}

Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::string_view body = strip_sign(text, negative);
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    const Integer d = decimal_integer(den);
    if (d == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    value = Rational(decimal_integer(num), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      scale *= 10;
    }
    const Integer digits = decimal_integer(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    value = Rational(decimal_integer(body));
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) {
      result *= b;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      b *= b;
    }
  }
  return result;
}

bool is_prime(const Integer& p) {
  if (p < 2) {
    return false;
  }
  return mpz_probab_prime_p(p.backend().data(), 30) != 0;
}

unsigned p_adic_valuation(const Integer& p, const Integer& a) {
  if (a == 0) {
    throw std::domain_error("valuation undefined");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("p_adic_valuation: " + p.str() + " is not prime");
  }
  Integer rest = abs(a);
  unsigned v = 0;
  while (rest % p == 0) {
    rest /= p;
    ++v;
  }
  return v;
}

}  // namespace tridesign
