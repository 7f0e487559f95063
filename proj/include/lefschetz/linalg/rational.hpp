#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace lefschetz {

// Expression templates are disabled so that `auto` always yields values.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

inline Rational abs(const Rational& q) { return q.sign() < 0 ? Rational(-q) : q; }
inline Integer abs(const Integer& z) { return z.sign() < 0 ? Integer(-z) : z; }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "-3", "7/4", "+2/6" (reduced on parse). Throws ParseError otherwise.
Rational parse_rational(std::string_view text, int line = 0);

/// Greatest integer <= q.
Integer floor(const Rational& q);
/// Least integer >= q.
Integer ceil(const Rational& q);
/// Nearest integer, ties rounded towards +infinity.
Integer round_nearest(const Rational& q);

/// Exact power with a signed exponent; zero to a negative power is rejected.
Rational pow(const Rational& base, std::int64_t exponent);

/// Smallest dyadic rational >= q (resp. <= q) whose denominator divides 2^bits.
Rational round_up(const Rational& q, unsigned bits);
Rational round_down(const Rational& q, unsigned bits);

/// A rational s with s >= sqrt(x) and s - sqrt(x) <= 2^-bits (x >= 0).
Rational sqrt_upper(const Rational& x, unsigned bits);
/// A rational s with s <= sqrt(x) and sqrt(x) - s <= 2^-bits (x >= 0).
Rational sqrt_lower(const Rational& x, unsigned bits);

/// The exact rational value of a finite double.
Rational from_double(double value);
double to_double(const Rational& q);

}  // namespace lefschetz
