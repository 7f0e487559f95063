#include "lefschetz/simplicial/cohomology.hpp"

#include "lefschetz/linalg/error.hpp"

#include <map>

namespace lefschetz::simplicial {

using linalg::IntegerMatrix;
using linalg::RationalMatrix;

std::size_t CohomologyProfile::dimension(int degree) const {
    if (degree < 0 || static_cast<std::size_t>(degree) >= dimensions.size()) return 0;
    return dimensions[static_cast<std::size_t>(degree)];
}

long CohomologyProfile::euler_characteristic() const {
    long chi = 0;
    for (std::size_t i = 0; i < dimensions.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(dimensions[i]);
    return chi;
}

linalg::GradedTrace CohomologyProfile::graded_trace() const {
    require(has_endomorphism(), "cohomology profile carries no endomorphism");
    linalg::GradedTrace g;
    for (std::size_t i = 0; i < endomorphism.size(); ++i)
        g.add(static_cast<int>(i), linalg::trace(endomorphism[i]));
    return g;
}

std::string CohomologyProfile::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < dimensions.size(); ++i) out += (i ? "," : "") + std::to_string(dimensions[i]);
    return out + ")";
}

namespace {

// Relative cochain basis: simplices of k outside sub, per degree.
struct CochainBasis {
    std::vector<std::vector<Simplex>> cells;
    std::vector<std::map<Simplex, std::size_t>> index;

    CochainBasis(const SimplicialComplex& k, const SimplicialComplex& sub) {
        const int top = k.dimension();
        cells.resize(static_cast<std::size_t>(top + 1));
        index.resize(cells.size());
        for (int d = 0; d <= top; ++d) {
            auto& level = cells[static_cast<std::size_t>(d)];
            for (const auto& s : k.simplices(d))
                if (!sub.contains(s)) {
                    index[static_cast<std::size_t>(d)].emplace(s, level.size());
                    level.push_back(s);
                }
        }
    }

    std::size_t size(int d) const {
        if (d < 0 || static_cast<std::size_t>(d) >= cells.size()) return 0;
        return cells[static_cast<std::size_t>(d)].size();
    }

    const Simplex* find(int d, const Simplex& s, std::size_t& at) const {
        if (d < 0 || static_cast<std::size_t>(d) >= cells.size()) return nullptr;
        auto it = index[static_cast<std::size_t>(d)].find(s);
        if (it == index[static_cast<std::size_t>(d)].end()) return nullptr;
        at = it->second;
        return &it->first;
    }
};

IntegerMatrix coboundary_matrix(const CochainBasis& basis, int degree) {
    IntegerMatrix delta(basis.size(degree + 1), basis.size(degree));
    if (degree + 1 >= static_cast<int>(basis.cells.size()) || degree < -1) return delta;
    const auto& upper = basis.cells[static_cast<std::size_t>(degree + 1)];
    for (std::size_t row = 0; row < upper.size(); ++row) {
        const Simplex& tau = upper[row];
        if (tau.size() < 2) continue;
        // (delta c)(tau) = sum_j (-1)^j c(tau with vertex j removed)
        for (std::size_t j = 0; j < tau.size(); ++j) {
            Simplex face = tau;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
            std::size_t col = 0;
            if (basis.find(degree, face, col)) delta(row, col) = (j % 2 == 0) ? 1 : -1;
        }
    }
    return delta;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix q(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = Rational(m(r, c));
    return q;
}

std::size_t integer_rank(const IntegerMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return linalg::smith_normal_form(m).rank();
}

// Per-degree representatives: columns of `cocycles` extend the coboundary
// basis `boundaries` to a basis of the cocycle space.
struct DegreeData {
    RationalMatrix boundaries;
    RationalMatrix representatives;
};

struct Computation {
    CochainBasis basis;
    std::vector<std::size_t> dims;
    std::vector<DegreeData> degrees;
};

Computation compute(const SimplicialComplex& k, const SimplicialComplex& sub) {
    require(!k.empty(), "cohomology of the empty complex");
    require(sub.is_full_subcomplex_of(k), "subcomplex is not a full subcomplex of the complex");
    Computation out{CochainBasis(k, sub), {}, {}};
    const int top = k.dimension();
    std::vector<IntegerMatrix> deltas;
    for (int d = -1; d <= top; ++d) deltas.push_back(coboundary_matrix(out.basis, d));
    auto delta = [&](int d) -> const IntegerMatrix& { return deltas[static_cast<std::size_t>(d + 1)]; };
    for (int d = 0; d <= top; ++d) {
        const std::size_t n = out.basis.size(d);
        const std::size_t r_out = integer_rank(delta(d));
        const std::size_t r_in = integer_rank(delta(d - 1));
        ensure(r_out == linalg::rank(to_rational(delta(d))), "integer and rational coboundary ranks differ");
        const std::size_t betti = n - r_out - r_in;

        RationalMatrix cocycles = delta(d).rows() == 0 ? RationalMatrix::identity(n)
                                                       : linalg::kernel_basis(to_rational(delta(d)));
        RationalMatrix boundaries = delta(d - 1).cols() == 0 ? RationalMatrix(n, 0)
                                                             : linalg::column_space_basis(to_rational(delta(d - 1)));
        auto taken = linalg::extend_basis(boundaries, cocycles);
        ensure(taken.size() == betti, "cocycle basis size disagrees with the rank count");
        out.dims.push_back(betti);
        out.degrees.push_back({boundaries, linalg::select_columns(cocycles, taken)});
    }
    return out;
}

// Pullback f^# : C^d(k, sub) -> C^d(k, sub); rows index source cells, columns target cells.
RationalMatrix cochain_pullback(const SimplicialMap& f, const CochainBasis& basis, int d) {
    const std::size_t n = basis.size(d);
    RationalMatrix pull(n, n);
    const auto& level = basis.cells[static_cast<std::size_t>(d)];
    for (std::size_t row = 0; row < n; ++row) {
        auto image = f.oriented_image(level[row]);
        if (!image) continue;
        std::size_t col = 0;
        if (basis.find(d, image->first, col)) pull(row, col) = image->second;
    }
    return pull;
}

CohomologyProfile induced(const SimplicialMap& f, const SimplicialComplex& sub) {
    require(f.is_self_map(), "induced endomorphism needs a self-map");
    require(f.maps_into(sub, sub), "self-map does not carry the subcomplex into itself");
    Computation c = compute(f.source(), sub);
    CohomologyProfile profile{c.dims, {}};
    for (std::size_t d = 0; d < c.dims.size(); ++d) {
        const DegreeData& data = c.degrees[d];
        const std::size_t b = data.boundaries.cols();
        const std::size_t h = data.representatives.cols();
        RationalMatrix m(h, h);
        if (h > 0) {
            RationalMatrix pushed = cochain_pullback(f, c.basis, static_cast<int>(d)) * data.representatives;
            RationalMatrix coords = linalg::solve(linalg::hstack(data.boundaries, data.representatives), pushed);
            for (std::size_t i = 0; i < h; ++i)
                for (std::size_t j = 0; j < h; ++j) m(i, j) = coords(b + i, j);
        }
        profile.endomorphism.push_back(std::move(m));
    }
    return profile;
}

}  // namespace

IntegerMatrix coboundary(const SimplicialComplex& k, const SimplicialComplex& sub, int degree) {
    return coboundary_matrix(CochainBasis(k, sub), degree);
}

CohomologyProfile cohomology(const SimplicialComplex& k) { return relative_cohomology(k, SimplicialComplex{}); }

CohomologyProfile relative_cohomology(const SimplicialComplex& k, const SimplicialComplex& sub) {
    return {compute(k, sub).dims, {}};
}

CohomologyProfile induced_endomorphism(const SimplicialMap& f) { return induced(f, SimplicialComplex{}); }

CohomologyProfile induced_endomorphism(const SimplicialMap& f, const SimplicialComplex& sub) {
    return induced(f, sub);
}

Rational lefschetz_number(const SimplicialMap& f) { return linalg::alternating_sum(induced_endomorphism(f).graded_trace()); }

Rational lefschetz_number(const SimplicialMap& f, const SimplicialComplex& sub) {
    return linalg::alternating_sum(induced_endomorphism(f, sub).graded_trace());
}

}  // namespace lefschetz::simplicial
