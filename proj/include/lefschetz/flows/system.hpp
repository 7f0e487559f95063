#pragma once

#include "lefschetz/flows/tangent.hpp"
#include "lefschetz/harness/report.hpp"
#include "lefschetz/simplicial/complex.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz::flows {

using simplicial::SimplicialComplex;
using simplicial::SimplicialMap;

/// A stationary point of the flow together with its tangent data in a chart.
struct FixedPointDatum {
    std::string id;
    simplicial::Vertex vertex = 0;  // the triangulation vertex sitting at the point
    bool fixed_by_sigma = false;
    TangentMatrix flow_tangent;     // T_x phi^t
    TangentMatrix sigma_tangent;    // T_x sigma, meaningful when fixed_by_sigma
    Rational delta = 1;             // det(1 - T_x phi^t) != 0 on (0, delta)
    bool expanding = false;         // T_x phi^t has an eigenvalue of modulus > 1 for t > 0
};

using Point = std::vector<linalg::Interval>;

/// A catalog flow with a commuting symmetry of finite order.
struct FlowSystem {
    std::string id;
    std::string manifold;
    std::string description;
    SimplicialComplex triangulation;
    SimplicialMap sigma_simplicial;
    int sigma_order = 1;
    Rational orbit_floor = 1;  // lower bound for closed-orbit lengths
    std::vector<FixedPointDatum> fixed_points;

    /// Point-level models used for the commutation check.
    std::function<Point(const Point&, const Rational& t, unsigned bits)> flow;
    std::function<Point(const Point&, unsigned bits)> sigma;
    std::vector<std::vector<Rational>> sample_points;

    /// Ids of the fixed points of phi^s o sigma, computed in closed form.
    /// Throws PreconditionError when that fixed set is not finite.
    std::function<std::vector<std::string>(const Rational& s)> composite_fixed_points;

    /// Simplicial maps homotopic to phi^s o sigma for several s.
    std::vector<SimplicialMap> homotopic_representatives;

    /// Whether a subcomplex is a union of flow lines (up to the combinatorial model).
    std::function<bool(const SimplicialComplex&)> flow_invariant;
    /// Catalog subcomplexes that may be removed for the compact-support identity.
    std::map<std::string, SimplicialComplex> regions;

    /// Throws PreconditionError for an unknown region name.
    const SimplicialComplex& region(const std::string& name) const;
};

struct SignOptions {
    std::optional<Rational> start;  // defaults to min(orbit_floor, delta_x) / N
    int grid_points = 10;
    unsigned min_bits = 64;
    unsigned max_bits = 1024;
};

struct SignEvaluation {
    int sign = 0;
    Rational start;
    std::vector<Rational> grid;
    std::vector<int> signs;
    unsigned bits = 0;  // highest precision needed, 0 when every grid value was exact
};

std::vector<FixedPointDatum> phi_fixed_points(const FlowSystem& s);

/// lim_{t -> 0+} sgn det(1 - T_x(phi^t sigma)), stabilized over t = start * 2^-j.
/// Throws PreconditionError("degenerate fixed point ...") when the grid signs
/// disagree or a determinant vanishes exactly, and PrecisionError("undecidable
/// sign ...") when an enclosure still meets zero at the maximum precision.
SignEvaluation evaluate_epsilon(const FlowSystem& s, const FixedPointDatum& x, const SignOptions& options = {});
int epsilon_sign(const FlowSystem& s, const FixedPointDatum& x, const SignOptions& options = {});

VerificationReport verify_thm25(const FlowSystem& s);
/// Rejects removed regions containing an expanding stationary point: there the
/// extension-by-zero coefficient has a nonzero local term and the identity fails
/// (the circle with its source removed gives -1 against +1).
VerificationReport verify_cor26(const FlowSystem& s, const SimplicialComplex& removed);

/// sigma(phi^t(p)) and phi^t(sigma(p)) overlap, with widths below 2^-(bits/2),
/// at every sample point and time.
bool check_commutation(const FlowSystem& s, const std::vector<Rational>& times, unsigned bits = 96);
/// Lefschetz numbers of sigma and of every homotopic representative.
std::vector<Rational> representative_lefschetz_numbers(const FlowSystem& s);
/// The s used by the screening check: half of N^-1 min(orbit_floor, min delta_x).
Rational screening_time(const FlowSystem& s);
/// Every fixed point of phi^s sigma, for s = screening_time / 2^j (j = 0..3),
/// is a sigma-fixed stationary point, and conversely.
bool check_screening(const FlowSystem& s);

}  // namespace lefschetz::flows
