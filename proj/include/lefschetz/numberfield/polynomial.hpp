#pragma once

#include "lefschetz/linalg/interval.hpp"
#include "lefschetz/linalg/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace lefschetz::numberfield {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coefficients);
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }
    static Polynomial x() { return Polynomial{0, 1}; }
    /// x^n.
    static Polynomial monomial(std::size_t n, const Rational& c = 1);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i (zero beyond the degree).
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    bool has_integer_coefficients() const;

    Rational operator()(const Rational& x) const;
    linalg::Interval operator()(const linalg::Interval& x) const;

    bool operator==(const Polynomial& other) const = default;

    /// Human-readable form such as "x^2 - 2".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& s, const Polynomial& a);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p);
Polynomial monic(const Polynomial& p);
/// outer(inner(x)).
Polynomial compose(const Polynomial& outer, const Polynomial& inner);
/// outer(inner(x)) reduced modulo m.
Polynomial compose_mod(const Polynomial& outer, const Polynomial& inner, const Polynomial& m);
bool is_squarefree(const Polynomial& p);

/// Parses a whitespace- or comma-separated coefficient list, lowest degree first.
Polynomial parse_coefficients(const std::string& text, int line = 0);

}  // namespace lefschetz::numberfield
