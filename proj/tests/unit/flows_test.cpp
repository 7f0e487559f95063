#include "doctest.h"

#include "lefschetz/flows/catalog.hpp"
#include "lefschetz/linalg/error.hpp"
#include "lefschetz/simplicial/cohomology.hpp"

#include <cmath>

using namespace lefschetz;
using namespace lefschetz::flows;
namespace fcat = lefschetz::flows::catalog;

namespace {

const double kTwoPi = 2 * std::acos(-1.0);

// Closed-form determinants det(1 - T_x(phi^t sigma)) in double precision,
// written out by hand per family.
double rotation_det(double speed, double sigma_turn, double t) {
    return 2 - 2 * std::cos(kTwoPi * (speed * t + sigma_turn));
}
double diagonal_det(const std::vector<double>& rates, double sigma_sign, double t) {
    double d = 1;
    for (double r : rates) d *= 1 - sigma_sign * std::exp(r * t);
    return d;
}
int sgn(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

FlowSystem single_point_system(TangentMatrix flow, TangentMatrix sigma, int order = 1) {
    FlowSystem s;
    s.id = "custom";
    s.sigma_order = order;
    s.fixed_points.push_back({"x", 0, true, std::move(flow), std::move(sigma), 1, false});
    return s;
}

std::vector<FlowSystem> all_catalog() {
    return {fcat::s1_gradient(1, false),
            fcat::s1_gradient(Rational(3, 2), true),
            fcat::s1_rotation(1, 0),
            fcat::s1_rotation(Rational(1, 3), 2),
            fcat::s2_rotation(1, fcat::SphereSymmetry::rotation, Rational(1, 2)),
            fcat::s2_rotation(2, fcat::SphereSymmetry::rotation, 0),
            fcat::s2_rotation(Rational(1, 2), fcat::SphereSymmetry::rotation, Rational(1, 3)),
            fcat::s2_rotation(1, fcat::SphereSymmetry::reflection),
            fcat::t2_translation(1, 0, 0, 0),
            fcat::t2_translation(Rational(1, 2), Rational(1, 3), 2, 1),
            fcat::t2_gradient(1, 2, false),
            fcat::t2_gradient(1, 1, true)};
}

}  // namespace

TEST_CASE("stationary points of catalog flows") {
    auto s2 = fcat::s2_rotation(1, fcat::SphereSymmetry::rotation, Rational(1, 2));
    auto pts = phi_fixed_points(s2);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].id == "north");
    CHECK(pts[1].id == "south");
    CHECK(pts[0].fixed_by_sigma);
    CHECK(pts[1].fixed_by_sigma);
    CHECK(phi_fixed_points(fcat::t2_translation()).empty());
    auto s1 = phi_fixed_points(fcat::s1_gradient());
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].id == "source");
    CHECK(s1[1].id == "sink");
}

TEST_CASE("epsilon signs match closed-form determinants") {
    auto s2 = fcat::s2_rotation(1, fcat::SphereSymmetry::rotation, 0);
    auto e = evaluate_epsilon(s2, s2.fixed_points[0]);
    CHECK(e.sign == 1);
    for (const auto& t : e.grid) REQUIRE(sgn(rotation_det(1, 0, to_double(t))) == 1);

    auto half = fcat::s2_rotation(1, fcat::SphereSymmetry::rotation, Rational(1, 2));
    for (const auto& x : half.fixed_points) {
        auto ev = evaluate_epsilon(half, x);
        for (const auto& t : ev.grid) REQUIRE(sgn(rotation_det(1, 0.5, to_double(t))) == ev.sign);
        CHECK(ev.sign == 1);
    }

    // Planar sink e^{lambda t} id with lambda < 0.
    auto sink = single_point_system(TangentMatrix::diagonal_exp({-2, -2}), TangentMatrix::identity(2));
    CHECK(epsilon_sign(sink, sink.fixed_points[0]) == 1);
    // One-dimensional source.
    auto source = single_point_system(TangentMatrix::diagonal_exp({Rational(1, 2)}), TangentMatrix::identity(1));
    CHECK(epsilon_sign(source, source.fixed_points[0]) == -1);

    for (const auto& s : {fcat::t2_gradient(1, 2, false), fcat::t2_gradient(3, 1, true)}) {
        double sig = s.sigma_simplicial(1) == 1 ? 1 : -1;
        std::vector<std::vector<double>> rates{{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
        if (sig < 0) rates = {{3, 1}, {3, -1}, {-3, 1}, {-3, -1}};
        for (std::size_t i = 0; i < 4; ++i) {
            auto ev = evaluate_epsilon(s, s.fixed_points[i]);
            REQUIRE(ev.sign == sgn(diagonal_det(rates[i], sig, to_double(ev.grid.back()))));
        }
    }
}

TEST_CASE("epsilon is unchanged by halving the grid start") {
    for (const auto& s : all_catalog())
        for (const auto& x : s.fixed_points) {
            if (!x.fixed_by_sigma) continue;
            auto base = evaluate_epsilon(s, x);
            SignOptions halved;
            halved.start = base.start / 2;
            REQUIRE(evaluate_epsilon(s, x, halved).sign == base.sign);
            SignOptions quartered;
            quartered.start = base.start / 4;
            REQUIRE(evaluate_epsilon(s, x, quartered).sign == base.sign);
        }
}

TEST_CASE("degenerate and undecidable fixed points") {
    auto flat = single_point_system(TangentMatrix::identity(1), TangentMatrix::identity(1));
    CHECK_THROWS_WITH_AS(epsilon_sign(flat, flat.fixed_points[0]), doctest::Contains("degenerate fixed point"),
                         PreconditionError);

    // det = sin(3 pi t): negative at t = 1/2, positive at t = 1/4.
    TangentMatrix flip(1);
    flip(0, 0) = TangentEntry({Term{1}, Term{-1, 0, Trig::sin, Rational(3, 2)}});
    auto flipping = single_point_system(flip, TangentMatrix::identity(1));
    SignOptions from_one;
    from_one.start = 1;
    CHECK_THROWS_WITH_AS(epsilon_sign(flipping, flipping.fixed_points[0], from_one),
                         doctest::Contains("does not stabilize"), PreconditionError);

    // The entry is exactly 1, so det = 0, but it is only known through enclosures of sin(2 pi / 7).
    TangentMatrix cancelling(1);
    cancelling(0, 0) = TangentEntry({Term{1, 0, Trig::sin, Rational(1, 7)}, Term{-1, 0, Trig::sin, Rational(1, 7)},
                                     Term{1}});
    auto cancel = single_point_system(cancelling, TangentMatrix::identity(1));
    SignOptions small;
    small.max_bits = 128;
    CHECK_THROWS_WITH_AS(epsilon_sign(cancel, cancel.fixed_points[0], small), doctest::Contains("undecidable sign"),
                         PrecisionError);
}

TEST_CASE("signed fixed-point sum equals the Lefschetz number") {
    auto s2 = verify_thm25(fcat::s2_rotation(1, fcat::SphereSymmetry::rotation, Rational(1, 2)));
    CHECK(s2.verdict == Verdict::equal);
    CHECK(s2.lhs == 2);
    CHECK(s2.rhs == 2);

    auto t2 = verify_thm25(fcat::t2_translation());
    CHECK(t2.verdict == Verdict::equal);
    CHECK(t2.lhs == 0);
    CHECK(t2.rhs == 0);

    auto s1 = fcat::s1_gradient();
    auto r1 = verify_thm25(s1);
    CHECK(r1.verdict == Verdict::equal);
    CHECK(r1.lhs == 0);
    CHECK(epsilon_sign(s1, s1.fixed_points[0]) == -1);
    CHECK(epsilon_sign(s1, s1.fixed_points[1]) == 1);

    // Reflection of the circle: Lefschetz number 2, both signs +1.
    auto refl = verify_thm25(fcat::s1_gradient(1, true));
    CHECK(refl.lhs == 2);
    CHECK(refl.verdict == Verdict::equal);

    // Negation on the torus acts by -1 on H^1: 1 + 2 + 1 = 4.
    auto neg = verify_thm25(fcat::t2_gradient(1, 1, true));
    CHECK(neg.lhs == 4);
    CHECK(neg.verdict == Verdict::equal);

    for (const auto& s : all_catalog()) REQUIRE(verify_thm25(s).verdict == Verdict::equal);
}

TEST_CASE("compact-support trace equals the sum over the open part") {
    auto s2 = fcat::s2_rotation(1, fcat::SphereSymmetry::rotation, 0);
    auto cap = verify_cor26(s2, s2.region("south-cap"));
    CHECK(cap.verdict == Verdict::equal);
    CHECK(cap.lhs == 1);
    CHECK(cap.rhs == 1);
    auto both = verify_cor26(s2, s2.region("both-caps"));
    CHECK(both.lhs == 0);
    CHECK(both.rhs == 0);

    auto t2 = fcat::t2_translation();
    auto circle = verify_cor26(t2, t2.region("circle"));
    CHECK(circle.verdict == Verdict::equal);
    CHECK(circle.lhs == 0);

    auto s1 = fcat::s1_gradient();
    auto minus_sink = verify_cor26(s1, s1.region("sink"));
    CHECK(minus_sink.lhs == -1);
    CHECK(minus_sink.verdict == Verdict::equal);
    CHECK_THROWS_AS(verify_cor26(s1, s1.region("source")), PreconditionError);
    // Why the source is excluded: the compact-support trace is -1 but the sink alone contributes +1.
    CHECK(simplicial::lefschetz_number(s1.sigma_simplicial, s1.region("source")) == -1);
    CHECK(epsilon_sign(s1, s1.fixed_points[1]) == 1);

    auto neg = fcat::t2_gradient(1, 1, true);
    auto neg_sink = verify_cor26(neg, neg.region("sink"));
    CHECK(neg_sink.lhs == 3);
    CHECK(neg_sink.verdict == Verdict::equal);

    auto reflect = fcat::s2_rotation(1, fcat::SphereSymmetry::reflection);
    CHECK_THROWS_AS(verify_cor26(reflect, reflect.region("south-cap")), PreconditionError);
    CHECK(verify_cor26(reflect, reflect.region("both-caps")).verdict == Verdict::equal);

    auto moving = fcat::t2_translation(1, 1);
    CHECK_THROWS_AS(moving.region("circle"), PreconditionError);
}

TEST_CASE("symmetry commutes with the flow") {
    std::vector<Rational> times{Rational(1, 10), Rational(1, 3), 1, Rational(5, 2)};
    for (const auto& s : all_catalog()) REQUIRE(check_commutation(s, times));
}

TEST_CASE("Lefschetz number is independent of s") {
    for (const auto& s : all_catalog()) {
        auto values = representative_lefschetz_numbers(s);
        REQUIRE(values.size() > 1);
        for (const auto& v : values) REQUIRE(v == values.front());
    }
}

TEST_CASE("fixed points of phi^s sigma are the sigma-fixed stationary points") {
    for (const auto& s : all_catalog()) REQUIRE(check_screening(s));
    auto rot = fcat::s1_rotation(1, 3);  // half-turn, order 2, orbit floor 1
    CHECK(screening_time(rot) == Rational(1, 4));
    CHECK_THROWS_AS(rot.composite_fixed_points(Rational(1, 2)), PreconditionError);
}

TEST_CASE("catalog flows from text parameters") {
    auto s = fcat::make_flow("s2-rotation", {{"speed", "1"}, {"sigma", "rotation 1/2"}});
    CHECK(s.sigma_order == 2);
    CHECK(verify_thm25(s).lhs == 2);
    CHECK(fcat::make_flow("t2-translation", {{"velocity", "1/2 0"}, {"sigma", "shift 2 0"}}).sigma_order == 2);
    CHECK_THROWS_AS(fcat::make_flow("s2-rotation", {{"sigma", "rotation 1/4"}, {"ring", "6"}}), PreconditionError);
    CHECK_THROWS_AS(fcat::make_flow("klein-bottle"), PreconditionError);
    CHECK_THROWS_AS(fcat::make_flow("s1-gradient", {{"speed", "1"}}), PreconditionError);
    CHECK_THROWS_AS(fcat::make_flow("s1-gradient", {{"rate", "0.5"}}), ParseError);
    CHECK(fcat::flow_ids().size() == 5);
}
