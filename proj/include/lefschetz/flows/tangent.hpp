#pragma once

#include "lefschetz/linalg/interval.hpp"
#include "lefschetz/linalg/matrix.hpp"

#include <optional>
#include <vector>

namespace lefschetz::flows {

enum class Trig { one, cos, sin };

/// coeff * e^{rate t} * trig(2 pi (frequency t + phase)). Frequency and phase
/// are measured in full turns.
struct Term {
    Rational coeff = 1;
    Rational rate = 0;
    Trig trig = Trig::one;
    Rational frequency = 0;
    Rational phase = 0;
};

/// A closed-form real function of t, as a finite sum of terms.
class TangentEntry {
public:
    TangentEntry() = default;
    TangentEntry(Rational constant);  // NOLINT(implicit)
    explicit TangentEntry(std::vector<Term> terms) : terms_(std::move(terms)) {}

    const std::vector<Term>& terms() const noexcept { return terms_; }

    linalg::Interval evaluate(const Rational& t, unsigned bits) const;
    /// Exact value when every term is rational at t: no exponential growth,
    /// and trigonometric arguments at rational angles with rational values.
    std::optional<Rational> exact(const Rational& t) const;

private:
    std::vector<Term> terms_;
};

/// cos(2 pi x) and sin(2 pi x) when they are rational (x in (1/12)Z with a
/// denominator among 1, 2, 3, 4, 6 after reduction).
std::optional<Rational> exact_cos_turns(const Rational& x);
std::optional<Rational> exact_sin_turns(const Rational& x);

/// Square matrix whose entries are functions of t.
class TangentMatrix {
public:
    TangentMatrix() = default;
    explicit TangentMatrix(std::size_t n) : n_(n), entries_(n * n, TangentEntry(Rational(0))) {}

    static TangentMatrix constant(const linalg::RationalMatrix& m);
    static TangentMatrix identity(std::size_t n);
    /// diag(e^{r_1 t}, ..., e^{r_n t}).
    static TangentMatrix diagonal_exp(const std::vector<Rational>& rates);
    /// e^{rate t} R(2 pi (frequency t + phase)), a scaled planar rotation.
    static TangentMatrix rotation(const Rational& frequency, const Rational& phase, const Rational& rate = 0);
    /// Block-diagonal sum.
    static TangentMatrix direct_sum(const TangentMatrix& a, const TangentMatrix& b);

    std::size_t size() const noexcept { return n_; }
    const TangentEntry& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
    TangentEntry& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }

    linalg::IntervalMatrix evaluate(const Rational& t, unsigned bits) const;
    std::optional<linalg::RationalMatrix> exact(const Rational& t) const;

private:
    std::size_t n_ = 0;
    std::vector<TangentEntry> entries_;
};

}  // namespace lefschetz::flows
