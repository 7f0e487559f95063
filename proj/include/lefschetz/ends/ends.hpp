#pragma once

#include "lefschetz/ends/exhaustion.hpp"
#include "lefschetz/harness/report.hpp"
#include "lefschetz/numberfield/field.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lefschetz::ends {

/// Connected components of the full subcomplex of `window` on the vertices not in `removed`.
/// Returns a component id for each such vertex, ids numbered by first appearance.
struct ComplementComponents {
    std::vector<Vertex> vertices;
    std::vector<std::size_t> component;
    std::size_t count = 0;

    std::size_t component_of(Vertex v) const;
};
ComplementComponents complement_components(const SimplicialComplex& window, const SimplicialComplex& removed);

/// c_n and the bonding maps pi0(X - K_{n+1}) -> pi0(X - K_n) for n = 1..levels.
struct EndProfile {
    std::string name;
    std::vector<std::size_t> counts;                 // counts[n-1] = c_n
    std::vector<std::vector<std::size_t>> bondings;  // bondings[n-1]: level n+1 -> level n
    std::vector<bool> bonding_surjective;

    std::size_t levels() const noexcept { return counts.size(); }
    std::size_t count(int n) const { return counts.at(static_cast<std::size_t>(n - 1)); }
    /// Equal counts and bijective bondings on levels n, n+1, n+2.
    bool stabilized_at(int n) const;
    /// Least such n, if any.
    std::optional<int> stabilized_from() const;
};

EndProfile end_approximation(const ExhaustedComplex& x, int levels);

/// Rank of map(pi0(X - K_n), A). A is "Z", "Q", or "Z/<m>"; the rank is c_n for all of them.
std::size_t locally_constant_functions(const EndProfile& p, int n, const std::string& ring = "Z");

/// Level-n end-function rank against dim H^0 of the boundary of the declared
/// compactification. Inconclusive when the profile has not stabilized at n or
/// no compactification is declared.
VerificationReport verify_eq21_level(const ExhaustedComplex& x, int n);

/// Components of spec(o_k (x) R): r1 real points and r2 complex points.
std::size_t arithmetic_ends(const numberfield::NumberField& k);
/// Place count against the Sturm count r1 and (deg - r1)/2.
VerificationReport verify_arithmetic_ends(const numberfield::NumberField& k);

}  // namespace lefschetz::ends
