#pragma once

#include "lefschetz/linalg/graded_trace.hpp"
#include "lefschetz/linalg/matrix.hpp"
#include "lefschetz/linalg/smith.hpp"
#include "lefschetz/simplicial/complex.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lefschetz::simplicial {

/// Rational cohomology H^0..H^d of a complex or a pair, optionally with the
/// matrices of an induced endomorphism in the canonical cocycle bases.
struct CohomologyProfile {
    std::vector<std::size_t> dimensions;
    std::vector<linalg::RationalMatrix> endomorphism;  // empty, or one square matrix per degree

    bool has_endomorphism() const noexcept { return !endomorphism.empty(); }
    std::size_t dimension(int degree) const;
    long euler_characteristic() const;
    /// Per-degree traces of the endomorphism. Requires has_endomorphism().
    linalg::GradedTrace graded_trace() const;
    std::string to_string() const;
};

/// Coboundary delta^degree : C^degree(k, sub) -> C^{degree+1}(k, sub) as an
/// integer matrix. Relative cochains are indexed by the simplices of k that
/// are not in sub, in lexicographic order.
linalg::IntegerMatrix coboundary(const SimplicialComplex& k, const SimplicialComplex& sub, int degree);

CohomologyProfile cohomology(const SimplicialComplex& k);
CohomologyProfile relative_cohomology(const SimplicialComplex& k, const SimplicialComplex& sub);

/// f^* on H^*(k). f must be a self-map.
CohomologyProfile induced_endomorphism(const SimplicialMap& f);
/// f^* on H^*(k, sub). f must be a self-map of k carrying sub into itself.
CohomologyProfile induced_endomorphism(const SimplicialMap& f, const SimplicialComplex& sub);

Rational lefschetz_number(const SimplicialMap& f);
Rational lefschetz_number(const SimplicialMap& f, const SimplicialComplex& sub);

}  // namespace lefschetz::simplicial
