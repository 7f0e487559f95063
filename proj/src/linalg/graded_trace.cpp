#include "lefschetz/linalg/graded_trace.hpp"

#include "lefschetz/linalg/error.hpp"

#include <algorithm>
#include <sstream>

namespace lefschetz::linalg {

Rational GradedTrace::in_degree(int degree) const {
    Rational sum = 0;
    for (const auto& [d, value] : entries)
        if (d == degree) sum += value;
    return sum;
}

std::string GradedTrace::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < entries.size(); ++i)
        out << (i ? ", " : "") << '(' << entries[i].first << ", " << lefschetz::to_string(entries[i].second) << ')';
    out << '}';
    return out.str();
}

Rational alternating_sum(const GradedTrace& g) {
    Rational sum = 0;
    for (const auto& [degree, value] : g.entries) {
        if (degree % 2 == 0)
            sum += value;
        else
            sum -= value;
    }
    return sum;
}

GroupAverageTrace group_average_trace(const RationalMatrix& phi, const std::vector<RationalMatrix>& group) {
    require(phi.is_square(), "group_average_trace: phi must be square");
    require(!group.empty(), "group_average_trace: empty group");
    const std::size_t n = phi.rows();
    for (const auto& g : group) {
        require(g.is_square() && g.rows() == n, "group_average_trace: group element of wrong size");
        require(is_invertible(g), "group_average_trace: group element is not invertible");
        require(phi * g == g * phi, "group_average_trace: phi does not commute with every group element");
    }
    for (const auto& g : group)
        for (const auto& h : group) {
            RationalMatrix gh = g * h;
            require(std::find(group.begin(), group.end(), gh) != group.end(),
                    "group_average_trace: group is not closed under multiplication");
        }

    const Rational order(static_cast<long>(group.size()));
    GroupAverageTrace out;
    Rational sum = 0;
    RationalMatrix projector(n, n);
    for (const auto& g : group) {
        sum += trace(phi * g);
        projector = projector + g;
    }
    out.averaged = sum / order;
    out.projector = (Rational(1) / order) * projector;

    // The image of the projector is V^G; phi preserves it because it commutes with G.
    RationalMatrix basis = column_space_basis(out.projector);
    out.fixed_dimension = basis.cols();
    out.fixed_subspace_trace = basis.cols() == 0 ? Rational(0) : trace(restrict_to(phi, basis));
    ensure(out.averaged == out.fixed_subspace_trace,
           "group average " + to_string(out.averaged) + " differs from fixed-subspace trace " +
               to_string(out.fixed_subspace_trace));
    return out;
}

}  // namespace lefschetz::linalg
