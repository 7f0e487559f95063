#include "lefschetz/flows/system.hpp"

#include "lefschetz/linalg/error.hpp"
#include "lefschetz/simplicial/cohomology.hpp"

#include <algorithm>

namespace lefschetz::flows {

using linalg::Interval;
using linalg::IntervalMatrix;
using linalg::RationalMatrix;

const SimplicialComplex& FlowSystem::region(const std::string& name) const {
    auto it = regions.find(name);
    require(it != regions.end(), "flow '" + id + "' has no region '" + name + "'");
    return it->second;
}

std::vector<FixedPointDatum> phi_fixed_points(const FlowSystem& s) { return s.fixed_points; }

namespace {

Rational min_delta(const FlowSystem& s) {
    Rational m = s.orbit_floor;
    for (const auto& x : s.fixed_points)
        if (x.delta < m) m = x.delta;
    return m;
}

// Sign of det(1 - T_x phi^t T_x sigma) at one grid value; 0 only if exact zero.
int sign_at(const FixedPointDatum& x, const Rational& t, const SignOptions& options, unsigned& bits_used) {
    auto flow_exact = x.flow_tangent.exact(t);
    auto sigma_exact = x.sigma_tangent.exact(Rational(0));
    const std::size_t n = x.flow_tangent.size();
    if (flow_exact && sigma_exact) {
        Rational det = linalg::determinant(RationalMatrix::identity(n) - *flow_exact * *sigma_exact);
        return sign(det);
    }
    for (unsigned bits = options.min_bits; bits <= options.max_bits; bits *= 2) {
        IntervalMatrix product = x.flow_tangent.evaluate(t, bits) * x.sigma_tangent.evaluate(Rational(0), bits);
        Interval det = linalg::determinant(IntervalMatrix::identity(n) - product);
        bits_used = std::max(bits_used, bits);
        if (int sg = det.certified_sign(); sg != 0) return sg;
    }
    throw PrecisionError("undecidable sign at fixed point '" + x.id + "' for t = " + to_string(t) + " at " +
                         std::to_string(options.max_bits) + " bits");
}

}  // namespace

SignEvaluation evaluate_epsilon(const FlowSystem& s, const FixedPointDatum& x, const SignOptions& options) {
    require(x.fixed_by_sigma, "epsilon sign needs a sigma-fixed point, '" + x.id + "' is moved");
    require(x.flow_tangent.size() == x.sigma_tangent.size(), "tangent maps at '" + x.id + "' differ in size");
    require(options.grid_points >= 1, "epsilon sign needs at least one grid point");
    SignEvaluation out;
    Rational cap = std::min(s.orbit_floor, x.delta);
    out.start = options.start ? *options.start : cap / s.sigma_order;
    require(out.start > 0, "grid start must be positive");
    Rational t = out.start;
    for (int j = 1; j <= options.grid_points; ++j) {
        t /= 2;
        int sg = sign_at(x, t, options, out.bits);
        if (sg == 0)
            throw PreconditionError("degenerate fixed point '" + x.id + "': det(1 - T(phi^t sigma)) = 0 at t = " +
                                    to_string(t));
        out.grid.push_back(t);
        out.signs.push_back(sg);
    }
    if (std::adjacent_find(out.signs.begin(), out.signs.end(), std::not_equal_to<>()) != out.signs.end())
        throw PreconditionError("degenerate fixed point '" + x.id + "': sign does not stabilize on the t-grid");
    out.sign = out.signs.front();
    return out;
}

int epsilon_sign(const FlowSystem& s, const FixedPointDatum& x, const SignOptions& options) {
    return evaluate_epsilon(s, x, options).sign;
}

namespace {

nlohmann::ordered_json fixed_point_json(const FlowSystem& s, const FixedPointDatum& x, bool in_region,
                                        Rational& sum) {
    nlohmann::ordered_json j;
    j["id"] = x.id;
    j["vertex"] = x.vertex;
    j["sigma_fixed"] = x.fixed_by_sigma;
    if (x.fixed_by_sigma && in_region) {
        SignEvaluation e = evaluate_epsilon(s, x);
        j["epsilon"] = e.sign;
        j["grid_start"] = to_string(e.start);
        j["grid_points"] = e.grid.size();
        j["bits"] = e.bits;
        sum += e.sign;
    }
    return j;
}

nlohmann::ordered_json dims_json(const std::vector<std::size_t>& dims) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (auto d : dims) j.push_back(d);
    return j;
}

}  // namespace

VerificationReport verify_thm25(const FlowSystem& s) {
    auto induced = simplicial::induced_endomorphism(s.sigma_simplicial);
    Rational lhs = linalg::alternating_sum(induced.graded_trace());
    Rational rhs = 0;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& x : s.fixed_points) points.push_back(fixed_point_json(s, x, true, rhs));
    VerificationReport r = make_report("thm2.5", lhs, "smith-ranks->cocycle-basis->induced-trace", rhs,
                                       "closed-form-tangent->t-grid-sign->sum");
    r.detail["flow"] = s.id;
    r.detail["betti"] = dims_json(induced.dimensions);
    r.detail["fixed_points"] = points;
    r.detail["sigma_order"] = s.sigma_order;
    return r;
}

VerificationReport verify_cor26(const FlowSystem& s, const SimplicialComplex& removed) {
    require(removed.is_full_subcomplex_of(s.triangulation), "removed set is not a full subcomplex");
    require(s.sigma_simplicial.maps_into(removed, removed), "removed set is not sigma-invariant");
    require(!s.flow_invariant || s.flow_invariant(removed), "removed set is not flow-invariant");
    for (const auto& x : s.fixed_points)
        require(!(removed.contains_vertex(x.vertex) && x.expanding),
                "removed set contains the expanding stationary point '" + x.id + "'");
    auto induced = simplicial::induced_endomorphism(s.sigma_simplicial, removed);
    Rational lhs = linalg::alternating_sum(induced.graded_trace());
    Rational rhs = 0;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& x : s.fixed_points) {
        bool inside = !removed.contains_vertex(x.vertex);
        auto j = fixed_point_json(s, x, inside, rhs);
        j["in_open_part"] = inside;
        points.push_back(j);
    }
    VerificationReport r = make_report("cor2.6", lhs, "relative-smith-ranks->cocycle-basis->induced-trace", rhs,
                                       "closed-form-tangent->t-grid-sign->sum-over-open-part");
    r.detail["flow"] = s.id;
    r.detail["compact_support_betti"] = dims_json(induced.dimensions);
    r.detail["removed_simplices"] = removed.total_count();
    r.detail["fixed_points"] = points;
    return r;
}

bool check_commutation(const FlowSystem& s, const std::vector<Rational>& times, unsigned bits) {
    require(static_cast<bool>(s.flow) && static_cast<bool>(s.sigma), "flow has no point-level model");
    const Rational tolerance = Rational(1) / Rational(Integer(1) << (bits / 2));
    for (const auto& raw : s.sample_points) {
        Point p(raw.begin(), raw.end());
        for (const Rational& t : times) {
            Point a = s.sigma(s.flow(p, t, bits), bits);
            Point b = s.flow(s.sigma(p, bits), t, bits);
            if (a.size() != b.size()) return false;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (!a[i].overlaps(b[i]) || a[i].width() > tolerance || b[i].width() > tolerance) return false;
        }
    }
    return true;
}

std::vector<Rational> representative_lefschetz_numbers(const FlowSystem& s) {
    std::vector<Rational> out{simplicial::lefschetz_number(s.sigma_simplicial)};
    for (const auto& f : s.homotopic_representatives) out.push_back(simplicial::lefschetz_number(f));
    return out;
}

Rational screening_time(const FlowSystem& s) { return min_delta(s) / (2 * s.sigma_order); }

bool check_screening(const FlowSystem& s) {
    require(static_cast<bool>(s.composite_fixed_points), "flow has no closed-form composite fixed set");
    std::vector<std::string> expected;
    for (const auto& x : s.fixed_points)
        if (x.fixed_by_sigma) expected.push_back(x.id);
    std::sort(expected.begin(), expected.end());
    Rational time = screening_time(s);
    for (int j = 0; j < 4; ++j, time /= 2) {
        auto got = s.composite_fixed_points(time);
        std::sort(got.begin(), got.end());
        if (got != expected) return false;
    }
    return true;
}

}  // namespace lefschetz::flows
