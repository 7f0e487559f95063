#include "lefschetz/flows/tangent.hpp"

#include "lefschetz/linalg/error.hpp"

namespace lefschetz::flows {

using linalg::Interval;
using linalg::IntervalMatrix;
using linalg::RationalMatrix;

std::optional<Rational> exact_cos_turns(const Rational& x) {
    // Reduce to [0, 1) and look the angle up among the rational cosines.
    Rational r = x - Rational(floor(x));
    static const std::vector<std::pair<Rational, Rational>> table{
        {Rational(0), Rational(1)},      {Rational(1, 6), Rational(1, 2)},  {Rational(1, 4), Rational(0)},
        {Rational(1, 3), Rational(-1, 2)}, {Rational(1, 2), Rational(-1)},  {Rational(2, 3), Rational(-1, 2)},
        {Rational(3, 4), Rational(0)},   {Rational(5, 6), Rational(1, 2)}};
    for (const auto& [angle, value] : table)
        if (angle == r) return value;
    return std::nullopt;
}

std::optional<Rational> exact_sin_turns(const Rational& x) { return exact_cos_turns(Rational(1, 4) - x); }

TangentEntry::TangentEntry(Rational constant) {
    if (constant != 0) terms_.push_back(Term{std::move(constant)});
}

Interval TangentEntry::evaluate(const Rational& t, unsigned bits) const {
    Interval total(Rational(0));
    for (const Term& term : terms_) {
        Interval value(term.coeff);
        if (term.rate != 0) value = value * linalg::exp_enclosure(term.rate * t, bits);
        if (term.trig != Trig::one) {
            Rational turns = term.frequency * t + term.phase;
            auto exact = term.trig == Trig::cos ? exact_cos_turns(turns) : exact_sin_turns(turns);
            if (exact) {
                value = value * Interval(*exact);
            } else {
                Interval angle = linalg::pi_enclosure(bits + 8) * Interval(2 * turns);
                value = value * (term.trig == Trig::cos ? linalg::cos_enclosure(angle, bits) : linalg::sin_enclosure(angle, bits));
            }
        }
        total = total + value;
    }
    return total.widen(bits + 16);
}

std::optional<Rational> TangentEntry::exact(const Rational& t) const {
    Rational total = 0;
    for (const Term& term : terms_) {
        if (term.rate != 0 && t != 0) return std::nullopt;
        Rational value = term.coeff;
        if (term.trig != Trig::one) {
            Rational turns = term.frequency * t + term.phase;
            auto trig = term.trig == Trig::cos ? exact_cos_turns(turns) : exact_sin_turns(turns);
            if (!trig) return std::nullopt;
            value *= *trig;
        }
        total += value;
    }
    return total;
}

TangentMatrix TangentMatrix::constant(const RationalMatrix& m) {
    require(m.is_square(), "tangent matrix must be square");
    TangentMatrix out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = TangentEntry(m(r, c));
    return out;
}

TangentMatrix TangentMatrix::identity(std::size_t n) { return constant(RationalMatrix::identity(n)); }

TangentMatrix TangentMatrix::diagonal_exp(const std::vector<Rational>& rates) {
    TangentMatrix out(rates.size());
    for (std::size_t i = 0; i < rates.size(); ++i) out(i, i) = TangentEntry({Term{1, rates[i]}});
    return out;
}

TangentMatrix TangentMatrix::rotation(const Rational& frequency, const Rational& phase, const Rational& rate) {
    TangentMatrix out(2);
    out(0, 0) = TangentEntry({Term{1, rate, Trig::cos, frequency, phase}});
    out(0, 1) = TangentEntry({Term{-1, rate, Trig::sin, frequency, phase}});
    out(1, 0) = TangentEntry({Term{1, rate, Trig::sin, frequency, phase}});
    out(1, 1) = TangentEntry({Term{1, rate, Trig::cos, frequency, phase}});
    return out;
}

TangentMatrix TangentMatrix::direct_sum(const TangentMatrix& a, const TangentMatrix& b) {
    TangentMatrix out(a.size() + b.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) out(a.size() + r, a.size() + c) = b(r, c);
    return out;
}

IntervalMatrix TangentMatrix::evaluate(const Rational& t, unsigned bits) const {
    IntervalMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) out(r, c) = (*this)(r, c).evaluate(t, bits);
    return out;
}

std::optional<RationalMatrix> TangentMatrix::exact(const Rational& t) const {
    RationalMatrix out(n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) {
            auto v = (*this)(r, c).exact(t);
            if (!v) return std::nullopt;
            out(r, c) = *v;
        }
    return out;
}

}  // namespace lefschetz::flows
