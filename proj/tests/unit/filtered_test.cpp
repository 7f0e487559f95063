#include "doctest.h"
#include "../support/generators.hpp"

#include "lefschetz/filtered/filtered.hpp"
#include "lefschetz/filtered/place_model.hpp"
#include "lefschetz/linalg/error.hpp"

#include <cmath>
#include <numbers>

using namespace lefschetz;
using namespace lefschetz::filtered;
using linalg::RationalMatrix;

namespace {

// Random endomorphism of Q^n preserving the filtration given by `weights`,
// with the graded traces read off its diagonal.
RationalMatrix random_preserving(std::mt19937_64& rng, const std::vector<int>& weights) {
    RationalMatrix e = testing::random_matrix(rng, weights.size(), weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (weights[i] < weights[j]) e(i, j) = 0;
    return e;
}

// det(1 - T) for the tangent block in double precision.
double det_oracle(const TangentBlockModel& b, double t) {
    double k = b.kind == PlaceKind::complex ? -1.0 : -2.0;
    double angle = 2 * std::numbers::pi * (to_double(b.leaf_frequency) * t + to_double(b.sigma_leaf_turns));
    double s = std::exp(t / 2);
    double leaf = 1 - 2 * s * std::cos(angle) + s * s;
    return leaf * (1 - b.sigma_transverse * std::exp(k * t));
}

}  // namespace

TEST_CASE("graded pieces of explicit filtrations") {
    RationalMatrix e{{2, 1, 5}, {0, 3, 7}, {0, 0, -4}};
    FilteredSpace m = FilteredSpace::from_jumps(3, {1, 2}, e);
    CHECK(m.weights() == std::vector<int>{2, 1, 0});
    CHECK(m.jumps() == std::vector<int>{2, 1, 0});
    std::vector<GradedPiece> g = graded(m);
    REQUIRE(g.size() == 3);
    CHECK(g[0].endomorphism == RationalMatrix{{2}});
    CHECK(g[1].endomorphism == RationalMatrix{{3}});
    CHECK(g[2].endomorphism == RationalMatrix{{-4}});
    VerificationReport r = graded_trace_identity(m);
    CHECK(r.identity == "gr-trace");
    CHECK(r.lhs == 1);
    CHECK(r.verdict == Verdict::equal);

    // Two jumps collapsing a 2x2 block.
    RationalMatrix f{{1, 2, 9}, {3, 4, 8}, {0, 0, 6}};
    std::vector<GradedPiece> h = graded(FilteredSpace::from_jumps(3, {2}, f));
    REQUIRE(h.size() == 2);
    CHECK(h[0].endomorphism == RationalMatrix{{1, 2}, {3, 4}});
    CHECK(h[1].endomorphism == RationalMatrix{{6}});

    RationalMatrix sigma{{1, 3}, {0, -1}};
    FilteredSpace with_inv = FilteredSpace::from_jumps(2, {1}, RationalMatrix{{1, 1}, {0, 2}}, sigma);
    std::vector<GradedPiece> gi = graded(with_inv);
    CHECK(*gi[0].involution == RationalMatrix{{1}});
    CHECK(*gi[1].involution == RationalMatrix{{-1}});

    CHECK_THROWS_AS(FilteredSpace::from_jumps(2, {1}, RationalMatrix{{1, 0}, {1, 1}}), PreconditionError);
    CHECK_THROWS_AS(FilteredSpace::from_jumps(2, {1}, RationalMatrix::identity(2), RationalMatrix{{1, 1}, {0, 1}}),
                    PreconditionError);
    CHECK_THROWS_AS(FilteredSpace::from_jumps(2, {2}, RationalMatrix::identity(2)), PreconditionError);
}

TEST_CASE("graded trace identity on random filtrations") {
    std::mt19937_64 rng(20261014);
    std::uniform_int_distribution<int> wdist(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> weights(5);
        for (int& w : weights) w = wdist(rng);
        RationalMatrix e = random_preserving(rng, weights);
        FilteredSpace m(weights, e);
        std::map<int, Rational> diagonal;
        for (std::size_t i = 0; i < 5; ++i) diagonal[weights[i]] += e(i, i);
        for (const GradedPiece& p : graded(m)) CHECK(trace(p.endomorphism) == diagonal[p.weight]);
        VerificationReport r = graded_trace_identity(m);
        CHECK(r.verdict == Verdict::equal);
        CHECK(r.rhs == trace(e));
    }
}

TEST_CASE("model flows at infinite places") {
    for (PlaceKind kind : {PlaceKind::complex, PlaceKind::real}) {
        InfinitePlaceModel p{kind};
        VerificationReport r = kappa_check(p, {0, Rational(1, 3), 1, 5});
        CHECK(r.verdict == Verdict::equal);
        CHECK(r.lhs == (kind == PlaceKind::complex ? -1 : -2));
        ExpValue one{1, 0};
        CHECK(p.flow(one, 0) == one);
        // Multiplier e^{-t} or e^{-2t} against double exp.
        double expected = std::exp((kind == PlaceKind::complex ? -1.0 : -2.0) * 0.75);
        CHECK(p.flow(one, Rational(3, 4)).enclosure(64).contains(Rational(0)) == false);
        CHECK(to_double(p.flow(one, Rational(3, 4)).enclosure(64).lo()) == doctest::Approx(expected));
        // Semigroup law.
        ExpValue r0{Rational(-7, 3), Rational(1, 2)};
        CHECK(p.flow(p.flow(r0, Rational(1, 4)), Rational(2, 5)) == p.flow(r0, Rational(13, 20)));
    }
    CHECK(InfinitePlaceModel{PlaceKind::real}.normalize({-2, 0}) == ExpValue{2, 0});
    CHECK_THROWS_AS(parse_place_kind("p-adic", 4), ParseError);
}

TEST_CASE("trajectories flow into the fixed point") {
    std::vector<Rational> grid{0, Rational(1, 2), 1, 2, 4};
    VerificationReport c = trajectory_convergence({PlaceKind::complex}, 3, grid);
    CHECK(c.verdict == Verdict::equal);
    CHECK(c.lhs == 2);
    VerificationReport r = trajectory_convergence({PlaceKind::real}, 3, grid);
    CHECK(r.verdict == Verdict::equal);
    CHECK(r.lhs == 1);
    VerificationReport z = trajectory_convergence({PlaceKind::complex}, 0, grid);
    CHECK(z.verdict == Verdict::equal);
    CHECK(z.detail["monotone_to_fixed_point"] == true);

    InfinitePlaceModel p{PlaceKind::complex};
    ExpValue x{Rational(5, 2), 0};
    CHECK(embed(p, p.flow(x, 3)) == flow(embed(p, x), 3));
    CHECK_FALSE(embed(p, x) == embed(p, {Rational(5, 3), 0}));
}

TEST_CASE("epsilon positivity of tangent blocks") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(0, 11);
    std::vector<Rational> grid{Rational(1, 8), Rational(1, 2), 1, 3};
    for (int trial = 0; trial < 100; ++trial) {
        TangentBlockModel b;
        b.kind = trial % 2 ? PlaceKind::real : PlaceKind::complex;
        b.leaf_frequency = Rational(num(rng), 4);
        b.sigma_leaf_turns = Rational(num(rng), 12);
        b.sigma_transverse = trial % 3 ? 1 : -1;
        VerificationReport r = epsilon_positivity(b, grid);
        CHECK(r.verdict == Verdict::equal);
        CHECK(r.lhs == 1);
        for (const auto& s : r.detail["samples"]) {
            double t = to_double(parse_rational(s["t"].get<std::string>()));
            CHECK((det_oracle(b, t) > 0) == (s["sign"].get<int>() > 0));
        }
    }
    TangentBlockModel bad;
    bad.sigma_leaf_reflection = true;
    CHECK_THROWS_AS(epsilon_positivity(bad, grid), PreconditionError);
    CHECK_THROWS_AS(epsilon_positivity(TangentBlockModel{}, {0}), PreconditionError);
}

TEST_CASE("periods lie in the group generated by log p") {
    CHECK(period_membership(6) == std::map<std::int64_t, int>{{2, 1}, {3, 1}});
    CHECK(period_membership(Rational(4, 9)) == std::map<std::int64_t, int>{{2, 2}, {3, -2}});
    CHECK(period_membership(Rational(30, 7)) == std::map<std::int64_t, int>{{2, 1}, {3, 1}, {5, 1}, {7, -1}});
    CHECK(period_membership(1).empty());
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(1, 500);
    for (int trial = 0; trial < 100; ++trial) {
        Rational a(d(rng), d(rng)), b(d(rng), d(rng));
        auto ea = period_membership(a), eb = period_membership(b), eab = period_membership(a * b);
        for (auto& [p, k] : eb) ea[p] += k;
        std::erase_if(ea, [](const auto& kv) { return kv.second == 0; });
        CHECK(ea == eab);
        CHECK(verify_period_membership(a).verdict == Verdict::equal);
    }
    CHECK_THROWS_AS(period_membership(Rational(-2)), PreconditionError);
}
