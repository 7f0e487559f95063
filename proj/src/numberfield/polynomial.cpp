#include "lefschetz/numberfield/polynomial.hpp"

#include "lefschetz/linalg/error.hpp"

#include <sstream>

namespace lefschetz::numberfield {

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(std::size_t n, const Rational& c) {
    std::vector<Rational> v(n + 1, Rational(0));
    v[n] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
    require(!is_zero(), "the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Polynomial::has_integer_coefficients() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

linalg::Interval Polynomial::operator()(const linalg::Interval& x) const {
    linalg::Interval acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + linalg::Interval(*it);
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        bool unit = mag == 1 && i > 0;
        if (!unit) out += lefschetz::to_string(mag);
        if (i > 0) out += unit ? "x" : "*x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coefficients().size(), b.coefficients().size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coefficients().size() + b.coefficients().size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        for (std::size_t j = 0; j < b.coefficients().size(); ++j) v[i + j] += a.coefficients()[i] * b.coefficients()[j];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> v = a.coefficients();
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    require(!b.is_zero(), "polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        Rational f = rem[static_cast<std::size_t>(i)] / b.leading();
        if (f == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return (Rational(1) / p.leading()) * p;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> v(p.coefficients().size() - 1);
    for (std::size_t i = 1; i < p.coefficients().size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * p.coefficients()[i];
    return Polynomial(std::move(v));
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
    Polynomial acc;
    for (auto it = outer.coefficients().rbegin(); it != outer.coefficients().rend(); ++it)
        acc = acc * inner + Polynomial::constant(*it);
    return acc;
}

Polynomial compose_mod(const Polynomial& outer, const Polynomial& inner, const Polynomial& m) {
    Polynomial acc;
    Polynomial in = inner % m;
    for (auto it = outer.coefficients().rbegin(); it != outer.coefficients().rend(); ++it)
        acc = (acc * in + Polynomial::constant(*it)) % m;
    return acc;
}

bool is_squarefree(const Polynomial& p) {
    if (p.degree() < 1) return !p.is_zero();
    return gcd(p, derivative(p)).degree() == 0;
}

Polynomial parse_coefficients(const std::string& text, int line) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(cleaned);
    std::vector<Rational> v;
    std::string token;
    while (in >> token) v.push_back(parse_rational(token, line));
    if (v.empty()) throw ParseError("empty coefficient list", line);
    return Polynomial(std::move(v));
}

}  // namespace lefschetz::numberfield
