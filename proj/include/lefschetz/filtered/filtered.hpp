#pragma once

#include "lefschetz/harness/report.hpp"
#include "lefschetz/linalg/matrix.hpp"

#include <optional>
#include <vector>

namespace lefschetz::filtered {

using linalg::RationalMatrix;

/// Finite-dimensional space with a decreasing filtration aligned to the standard
/// basis: V^k is spanned by the e_i with weight(e_i) >= k. The endomorphism and
/// the optional involution preserve every V^k.
class FilteredSpace {
public:
    FilteredSpace(std::vector<int> weights, RationalMatrix endomorphism, std::optional<RationalMatrix> involution = std::nullopt);

    /// Jumps 0 < j_1 < ... < j_r < dim: weight(e_i) = number of jumps greater than i,
    /// so the deepest step is spanned by the first basis vectors.
    static FilteredSpace from_jumps(std::size_t dimension, const std::vector<std::size_t>& jumps, RationalMatrix endomorphism,
                                    std::optional<RationalMatrix> involution = std::nullopt);

    std::size_t dimension() const noexcept { return weights_.size(); }
    const std::vector<int>& weights() const noexcept { return weights_; }
    const RationalMatrix& endomorphism() const noexcept { return e_; }
    const std::optional<RationalMatrix>& involution() const noexcept { return involution_; }
    /// Distinct weights, largest first.
    std::vector<int> jumps() const;
    /// Columns spanning V^k.
    RationalMatrix step(int k) const;

private:
    std::vector<int> weights_;
    RationalMatrix e_;
    std::optional<RationalMatrix> involution_;
};

struct GradedPiece {
    int weight = 0;
    RationalMatrix endomorphism;  // induced on V^k / V^{k+1}
    std::optional<RationalMatrix> involution;
};

/// Gr^k = V^k / V^{k+1} with the induced maps, largest weight first.
std::vector<GradedPiece> graded(const FilteredSpace& m);

/// Sum over k of Tr(e | Gr^k) against Tr(e | M).
VerificationReport graded_trace_identity(const FilteredSpace& m);

/// Upper-block-triangular endomorphism for the given weights: entries (i, j) with
/// weight_i >= weight_j are free, the rest vanish.
bool preserves_filtration(const std::vector<int>& weights, const RationalMatrix& map);

}  // namespace lefschetz::filtered
