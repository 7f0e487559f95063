#include "lefschetz/linalg/rational.hpp"

#include "lefschetz/linalg/error.hpp"

#include <cctype>
#include <cmath>

namespace lefschetz {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text, int line) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not an exact rational: '" + std::string(text) + "'", line);
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", line);
    Rational q(n, d);
    return negative ? Rational(-q) : q;
}

Integer floor(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer result = n / d;  // truncates towards zero
    if (n.sign() < 0 && result * d != n) result -= 1;
    return result;
}

Integer ceil(const Rational& q) {
    Integer f = floor(q);
    return Rational(f) == q ? f : Integer(f + 1);
}

Integer round_nearest(const Rational& q) { return floor(q + Rational(1, 2)); }

Rational pow(const Rational& base, std::int64_t exponent) {
    if (exponent < 0) {
        require(base != 0, "zero raised to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational result = 1;
    Rational square = base;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e != 0) {
        if (e & 1U) result *= square;
        e >>= 1U;
        if (e != 0) square *= square;
    }
    return result;
}

Rational round_up(const Rational& q, unsigned bits) {
    Integer scale = Integer(1) << bits;
    return Rational(ceil(q * Rational(scale)), scale);
}

Rational round_down(const Rational& q, unsigned bits) {
    Integer scale = Integer(1) << bits;
    return Rational(floor(q * Rational(scale)), scale);
}

Rational sqrt_lower(const Rational& x, unsigned bits) {
    require(x.sign() >= 0, "square root of a negative rational");
    // floor(sqrt(x * 4^bits)) / 2^bits, computed with an integer square root.
    Integer scale = Integer(1) << bits;
    Integer scaled = floor(x * Rational(scale * scale));
    Integer root = boost::multiprecision::sqrt(scaled);
    return Rational(root, scale);
}

Rational sqrt_upper(const Rational& x, unsigned bits) {
    require(x.sign() >= 0, "square root of a negative rational");
    Integer scale = Integer(1) << bits;
    Integer scaled = ceil(x * Rational(scale * scale));
    Integer root = boost::multiprecision::sqrt(scaled);
    if (root * root < scaled) root += 1;
    return Rational(root, scale);
}

Rational from_double(double value) {
    require(std::isfinite(value), "non-finite double has no rational value");
    int exponent = 0;
    double mantissa = std::frexp(value, &exponent);
    // mantissa * 2^53 is an exact integer.
    auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational result{Integer(scaled)};
    if (exponent >= 0) return result * Rational(Integer(1) << exponent);
    return result / Rational(Integer(1) << (-exponent));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace lefschetz
