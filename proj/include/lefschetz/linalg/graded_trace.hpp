#pragma once

#include "lefschetz/linalg/matrix.hpp"
#include "lefschetz/linalg/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lefschetz::linalg {

/// Traces of an endomorphism of a graded space, one entry per degree.
/// Degrees may repeat; the alternating sum accumulates them.
struct GradedTrace {
    std::vector<std::pair<int, Rational>> entries;

    GradedTrace() = default;
    GradedTrace(std::initializer_list<std::pair<int, Rational>> init) : entries(init) {}

    void add(int degree, Rational value) { entries.emplace_back(degree, std::move(value)); }
    /// Trace in one degree (zero when absent).
    Rational in_degree(int degree) const;
    std::string to_string() const;
};

/// Lefschetz number: sum over degrees of (-1)^i Tr_i.
Rational alternating_sum(const GradedTrace& g);

/// Both sides of the averaging lemma Tr(phi | V^G) = |G|^{-1} sum_g Tr(phi g).
struct GroupAverageTrace {
    Rational averaged;             // |G|^{-1} sum_g Tr(phi o g)
    Rational fixed_subspace_trace; // Tr(phi restricted to the image of the projector)
    std::size_t fixed_dimension = 0;
    RationalMatrix projector;

    const Rational& value() const noexcept { return averaged; }
};

/// Computes both routes and throws InternalError if they disagree.
/// Rejects non-square, mismatched, singular, non-commuting or non-closed input.
GroupAverageTrace group_average_trace(const RationalMatrix& phi, const std::vector<RationalMatrix>& group);

}  // namespace lefschetz::linalg
