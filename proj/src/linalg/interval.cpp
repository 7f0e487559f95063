#include "lefschetz/linalg/interval.hpp"

#include "lefschetz/linalg/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace lefschetz::linalg {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    require(lo_ <= hi_, "interval with lo > hi");
}

Interval Interval::widen(unsigned bits) const { return {round_down(lo_, bits), round_up(hi_, bits)}; }

std::string Interval::to_string() const {
    return "[" + lefschetz::to_string(lo_) + ", " + lefschetz::to_string(hi_) + "]";
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo() + b.lo(), a.hi() + b.hi()}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo() - b.hi(), a.hi() - b.lo()}; }
Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

Interval operator*(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
    require(!b.contains(0), "interval division by an interval containing zero");
    return a * Interval(Rational(1) / b.hi(), Rational(1) / b.lo());
}

namespace {

Rational two_pow(long e) {
    if (e >= 0) return Rational(Integer(1) << static_cast<unsigned>(e));
    return Rational(Integer(1), Integer(1) << static_cast<unsigned>(-e));
}

// |series tail| bound after the sum has been truncated is added symmetrically.
Interval with_error(const Rational& value, const Rational& error, unsigned bits) {
    return Interval(value - error, value + error).widen(bits);
}

// exp(y) for |y| <= 1/2 by Taylor series.
Interval exp_small(const Rational& y, unsigned bits) {
    const Rational eps = two_pow(-static_cast<long>(bits) - 2);
    Rational sum = 0;
    Rational term = 1;
    for (long i = 1;; ++i) {
        sum += term;
        term = round_down(term * y / Rational(i), bits + 16);
        // Rounding each term perturbs the sum by at most 2^-(bits+16) per step.
        if (abs(term) < eps) {
            Rational error = 2 * abs(term) + Rational(2 * i + 4) * two_pow(-static_cast<long>(bits) - 16);
            return with_error(sum, error, bits + 4);
        }
    }
}

Interval arctan_inverse(long n, unsigned bits) {
    // arctan(1/n) = sum (-1)^k / ((2k+1) n^(2k+1)); alternating, decreasing.
    const Rational x(1, n);
    const Rational x2 = x * x;
    const Rational eps = two_pow(-static_cast<long>(bits) - 4);
    Rational power = x;
    Rational sum = 0;
    for (long k = 0;; ++k) {
        Rational term = power / Rational(2 * k + 1);
        if (term < eps) return Interval(sum - term, sum + term);
        sum += (k % 2 == 0) ? term : Rational(-term);
        power *= x2;
    }
}

// cos or sin of a rational |y| <= 4 by Taylor series with alternating tail bound.
Interval trig_small(const Rational& y, bool cosine, unsigned bits) {
    const Rational eps = two_pow(-static_cast<long>(bits) - 4);
    const Rational y2 = y * y;
    Rational term = cosine ? Rational(1) : y;
    long n = cosine ? 0 : 1;  // current power
    Rational sum = 0;
    for (long k = 0;; ++k) {
        // Once terms decrease monotonically the alternating tail is below |term|.
        if (abs(term) < eps && Rational((n + 1) * (n + 2)) > y2) {
            // Rounded terms drift by at most e^|y| * 2^-(bits+24) < 2^-(bits+16) each.
            Rational drift = Rational(k + 2) * two_pow(-static_cast<long>(bits) - 16);
            return with_error(sum, abs(term) + drift, bits + 4);
        }
        sum += (k % 2 == 0) ? term : Rational(-term);
        term = round_down(term * y2 / Rational((n + 1) * (n + 2)), bits + 24);
        n += 2;
        if (k > 4 * static_cast<long>(bits) + 200) throw PrecisionError("trigonometric series did not converge");
    }
}

Interval clamp_unit(const Interval& v) {
    return {std::max(v.lo(), Rational(-1)), std::min(v.hi(), Rational(1))};
}

Interval trig(const Interval& x, bool cosine, unsigned bits) {
    const unsigned work = bits + 8;
    Rational mid = round_down(x.midpoint(), work + 8);
    Rational radius = std::max(x.hi() - mid, mid - x.lo());

    // Range reduction by the nearest multiple of 2 pi.
    Interval pi = pi_enclosure(work + 16);
    Interval two_pi = Interval(Rational(2)) * pi;
    Integer turns = round_nearest(mid / two_pi.midpoint());
    Interval reduced = Interval(mid) - Interval(Rational(turns)) * two_pi;
    Rational center = round_down(reduced.midpoint(), work + 8);
    Rational spread = std::max(reduced.hi() - center, center - reduced.lo());

    // |cos'|, |sin'| <= 1, so the argument uncertainty transfers one-to-one.
    Interval core = trig_small(center, cosine, work);
    return clamp_unit(core.inflate(spread + radius).widen(bits));
}

}  // namespace

Interval exp_enclosure(const Rational& x, unsigned bits) {
    // exp(x) = exp(x / 2^k)^(2^k) with |x / 2^k| <= 1/2.
    unsigned k = 0;
    Rational y = x;
    while (abs(y) > Rational(1, 2)) {
        y /= 2;
        ++k;
    }
    const unsigned work = bits + 2 * k + 16;
    Interval value = exp_small(y, work);
    for (unsigned i = 0; i < k; ++i) value = (value * value).widen(work);
    return value.widen(bits + 4);
}

Interval exp_enclosure(const Interval& x, unsigned bits) {
    // exp is increasing.
    return {exp_enclosure(x.lo(), bits).lo(), exp_enclosure(x.hi(), bits).hi()};
}

Interval pi_enclosure(unsigned bits) {
    static std::mutex mutex;
    static std::map<unsigned, Interval> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(bits); it != cache.end()) return it->second;
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
    Interval a = arctan_inverse(5, bits + 8);
    Interval b = arctan_inverse(239, bits + 8);
    Interval pi = (Interval(Rational(16)) * a - Interval(Rational(4)) * b).widen(bits + 4);
    cache.emplace(bits, pi);
    return pi;
}

Interval cos_enclosure(const Interval& x, unsigned bits) { return trig(x, true, bits); }
Interval sin_enclosure(const Interval& x, unsigned bits) { return trig(x, false, bits); }

IntervalMatrix IntervalMatrix::identity(std::size_t n) {
    IntervalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Interval(Rational(1));
    return m;
}

IntervalMatrix operator*(const IntervalMatrix& a, const IntervalMatrix& b) {
    require(a.size() == b.size(), "interval matrix size mismatch");
    IntervalMatrix out(a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) {
            Interval sum(Rational(0));
            for (std::size_t k = 0; k < a.size(); ++k) sum = sum + a(r, k) * b(k, c);
            out(r, c) = sum;
        }
    return out;
}

IntervalMatrix operator-(const IntervalMatrix& a, const IntervalMatrix& b) {
    require(a.size() == b.size(), "interval matrix size mismatch");
    IntervalMatrix out(a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

namespace {

Interval cofactor_det(const IntervalMatrix& m, std::vector<std::size_t>& columns, std::size_t row) {
    if (row == m.size()) return Interval(Rational(1));
    Interval sum(Rational(0));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        std::size_t col = columns[j];
        if (m(row, col).lo() == 0 && m(row, col).hi() == 0) continue;
        columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(j));
        Interval minor = cofactor_det(m, columns, row + 1);
        columns.insert(columns.begin() + static_cast<std::ptrdiff_t>(j), col);
        Interval term = m(row, col) * minor;
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

}  // namespace

Interval determinant(const IntervalMatrix& m) {
    require(m.size() <= 8, "interval determinant limited to desk-scale sizes");
    std::vector<std::size_t> columns(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) columns[i] = i;
    return cofactor_det(m, columns, 0);
}

}  // namespace lefschetz::linalg
