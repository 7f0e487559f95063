#pragma once

#include "lefschetz/linalg/rational.hpp"

#include <string>
#include <vector>

namespace lefschetz::linalg {

/// Closed interval [lo, hi] with rational endpoints. Arithmetic is exact on
/// the endpoints; `widen` rounds outward to dyadic rationals to keep sizes bounded.
class Interval {
public:
    Interval() = default;
    Interval(Rational point) : lo_(point), hi_(std::move(point)) {}  // NOLINT(implicit)
    Interval(Rational lo, Rational hi);

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool is_positive() const { return lo_ > 0; }
    bool is_negative() const { return hi_ < 0; }
    bool overlaps(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
    /// +1 or -1 when certified, 0 when the interval meets zero.
    int certified_sign() const { return is_positive() ? 1 : (is_negative() ? -1 : 0); }

    /// Outward rounding to a denominator of 2^bits.
    Interval widen(unsigned bits) const;
    /// Symmetric enlargement by a nonnegative radius.
    Interval inflate(const Rational& radius) const { return {lo_ - radius, hi_ + radius}; }

    std::string to_string() const;

private:
    Rational lo_ = 0;
    Rational hi_ = 0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Rejects divisors that contain zero.
Interval operator/(const Interval& a, const Interval& b);

/// Certified enclosures. `bits` bounds the width of the result by roughly 2^-bits
/// times the magnitude of the result.
Interval exp_enclosure(const Rational& x, unsigned bits);
Interval exp_enclosure(const Interval& x, unsigned bits);
Interval pi_enclosure(unsigned bits);
Interval cos_enclosure(const Interval& x, unsigned bits);
Interval sin_enclosure(const Interval& x, unsigned bits);

/// Square matrix of intervals, enough for determinants of tangent maps.
class IntervalMatrix {
public:
    IntervalMatrix() = default;
    explicit IntervalMatrix(std::size_t n) : n_(n), data_(n * n, Interval(Rational(0))) {}

    static IntervalMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    const Interval& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
    Interval& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }

private:
    std::size_t n_ = 0;
    std::vector<Interval> data_;
};

IntervalMatrix operator*(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix operator-(const IntervalMatrix& a, const IntervalMatrix& b);
/// Cofactor expansion; desk-scale sizes only. The empty matrix has determinant 1.
Interval determinant(const IntervalMatrix& m);

}  // namespace lefschetz::linalg
