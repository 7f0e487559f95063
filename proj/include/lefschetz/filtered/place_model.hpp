#pragma once

#include "lefschetz/harness/report.hpp"
#include "lefschetz/linalg/interval.hpp"
#include "lefschetz/linalg/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lefschetz::filtered {

/// The real number coeff * e^exponent, kept exact.
struct ExpValue {
    Rational coeff = 0;
    Rational exponent = 0;

    bool operator==(const ExpValue& other) const;
    linalg::Interval enclosure(unsigned bits = 64) const;
};

enum class PlaceKind { real, complex };
const char* to_string(PlaceKind k);
PlaceKind parse_place_kind(const std::string& text, int line = 0);

/// The transverse exponent attached to the kind: -1 complex, -2 real.
Rational kappa(PlaceKind k);

/// Model flow at an infinite place on R (complex) or R>=0 (real):
/// r -> r e^{-t} and r -> r e^{-2t} respectively.
struct InfinitePlaceModel {
    PlaceKind kind = PlaceKind::complex;

    Rational rate() const { return kind == PlaceKind::complex ? Rational(-1) : Rational(-2); }
    ExpValue flow(const ExpValue& r, const Rational& t) const;
    /// Points of the model space; the real model identifies r and -r.
    ExpValue normalize(const ExpValue& r) const;
};

/// Points phi^s(x_sign) of the trajectories flowing into the fixed point, with
/// s = log(c)/kappa + shift written symbolically; the fixed point itself has sign 0.
/// Equality is exact because log of a rational other than 1 is transcendental.
struct TrajectoryPoint {
    int sign = 0;
    Rational log_of = 1;   // c in log(c)
    Rational log_scale = 0;  // coefficient of log(c)
    Rational shift = 0;

    bool operator==(const TrajectoryPoint& other) const = default;
};
/// iota(r) = phi^{log|r| / rate}(x_sign(r)).
TrajectoryPoint embed(const InfinitePlaceModel& p, const ExpValue& r);
TrajectoryPoint flow(const TrajectoryPoint& x, const Rational& t);

/// Derivative of the model flow at the fixed point over the grid against kappa(kind).
VerificationReport kappa_check(const InfinitePlaceModel& p, const std::vector<Rational>& t_grid);

/// Leaf block e^{t/2} times a rotation by leaf_frequency * t turns, transverse
/// eigenvalue e^{kappa t}; sigma rotates the leaf by sigma_leaf_turns and acts
/// by sigma_transverse = +-1 across it.
struct TangentBlockModel {
    PlaceKind kind = PlaceKind::complex;
    Rational leaf_frequency = 0;
    Rational sigma_leaf_turns = 0;
    int sigma_transverse = 1;
    /// A leaf reflection would give real eigenvalues +-1; such blocks are rejected.
    bool sigma_leaf_reflection = false;
};

/// Certified sign of det(1 - T(phi^t sigma)) on every grid point against the
/// closed-form sign (1 -+ e^{kappa t}) * |1 - lambda|^2.
VerificationReport epsilon_positivity(const TangentBlockModel& b, const std::vector<Rational>& t_grid,
                                      unsigned max_bits = 1024);

/// Monotone decay of |phi^t(x0)| along the grid, equivariance iota(phi^t r) =
/// phi^t(iota r), and the number of distinct trajectories through +-x0.
VerificationReport trajectory_convergence(const InfinitePlaceModel& p, const Rational& x0, const std::vector<Rational>& t_grid);

/// Exponents e_p with q = prod p^e_p, i.e. log q in the group generated by the log p.
std::map<std::int64_t, int> period_membership(const Rational& q);
VerificationReport verify_period_membership(const Rational& q);

}  // namespace lefschetz::filtered
