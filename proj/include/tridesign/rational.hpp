#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace tridesign {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// Largest integer <= r.
Integer floor_of(const Rational& r);
/// Smallest integer >= r.
Integer ceil_of(const Rational& r);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q" (optionally signed) and finite decimals such as "-0.125".
/// Throws std::invalid_argument on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// Optionally signed decimal digits; leading zeros are decimal, not octal.
/// Throws std::invalid_argument otherwise.
Integer parse_integer(std::string_view text);
/// True when text is an integer or p/q token (no decimal point / exponent).
bool is_rational_token(std::string_view text);

double to_double(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

bool is_prime(const Integer& p);

/// Exponent of the largest power of the prime p dividing a.
/// Throws std::domain_error("valuation undefined") for a == 0 and
/// std::invalid_argument when p is not prime.
unsigned p_adic_valuation(const Integer& p, const Integer& a);

}  // namespace tridesign
