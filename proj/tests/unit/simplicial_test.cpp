#include "doctest.h"

#include "lefschetz/linalg/error.hpp"
#include "lefschetz/simplicial/catalog.hpp"
#include "lefschetz/simplicial/cohomology.hpp"

#include <cstdint>
#include <set>
#include <sstream>

using namespace lefschetz;
using namespace lefschetz::simplicial;
namespace cat = lefschetz::simplicial::catalog;

namespace {

// Independent Betti oracle: boundary ranks modulo a large prime, with its own
// face enumeration. Valid for the torsion-free complexes used below.
constexpr std::int64_t kPrime = 1000003;

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] % kPrime == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        std::int64_t inv = 1, base = ((a[rank][c] % kPrime) + kPrime) % kPrime, e = kPrime - 2;
        while (e) {
            if (e & 1) inv = inv * base % kPrime;
            base = base * base % kPrime;
            e >>= 1;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            std::int64_t f = ((a[r][c] % kPrime) + kPrime) % kPrime * inv % kPrime;
            if (f == 0) continue;
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % kPrime + kPrime) % kPrime;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> betti_oracle(const std::vector<Simplex>& facets, const std::set<Simplex>& removed = {}) {
    std::vector<std::set<Simplex>> cells;
    for (const auto& f : facets)
        for (unsigned mask = 1; mask < (1U << f.size()); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask & (1U << i)) s.push_back(f[i]);
            if (removed.count(s)) continue;
            if (cells.size() < s.size()) cells.resize(s.size());
            cells[s.size() - 1].insert(s);
        }
    std::vector<std::size_t> ranks(cells.size() + 1, 0);  // ranks[d] = rank of boundary C_d -> C_{d-1}
    for (std::size_t d = 1; d < cells.size(); ++d) {
        std::vector<Simplex> lower(cells[d - 1].begin(), cells[d - 1].end());
        std::vector<std::vector<std::int64_t>> m(lower.size(), std::vector<std::int64_t>(cells[d].size(), 0));
        std::size_t col = 0;
        for (const auto& s : cells[d]) {
            for (std::size_t j = 0; j < s.size(); ++j) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(j));
                for (std::size_t r = 0; r < lower.size(); ++r)
                    if (lower[r] == face) m[r][col] = (j % 2) ? -1 : 1;
            }
            ++col;
        }
        ranks[d] = rank_mod_p(m);
    }
    std::vector<std::size_t> betti;
    for (std::size_t d = 0; d < cells.size(); ++d) betti.push_back(cells[d].size() - ranks[d] - ranks[d + 1]);
    return betti;
}

// H^1(S^1) is detected by integrating a cochain around the cycle 0 -> 1 -> ... -> m-1 -> 0.
Rational circle_integral(const std::vector<Rational>& cochain, const SimplicialComplex& circle, int m) {
    Rational total = 0;
    for (int i = 0; i < m; ++i) {
        int a = i, b = (i + 1) % m;
        Simplex e = a < b ? Simplex{a, b} : Simplex{b, a};
        total += (a < b ? 1 : -1) * cochain[*circle.index_of(e)];
    }
    return total;
}

// Degree of a self-map of polygon(m) via explicit cocycle pushforward.
Rational circle_degree_oracle(const std::map<Vertex, Vertex>& f, int m) {
    SimplicialComplex c = cat::polygon(m);
    std::vector<Rational> cocycle(c.count(1), 0);
    cocycle[*c.index_of({0, 1})] = 1;
    std::vector<Rational> pulled(c.count(1), 0);
    for (const auto& e : c.simplices(1)) {
        Vertex a = f.at(e[0]), b = f.at(e[1]);
        if (a == b) continue;
        Simplex img = a < b ? Simplex{a, b} : Simplex{b, a};
        pulled[*c.index_of(e)] = (a < b ? 1 : -1) * cocycle[*c.index_of(img)];
    }
    return circle_integral(pulled, c, m) / circle_integral(cocycle, c, m);
}

bool is_identity(const linalg::RationalMatrix& m) { return m == linalg::RationalMatrix::identity(m.rows()); }

}  // namespace

TEST_CASE("complex construction closes under faces") {
    SimplicialComplex tri = SimplicialComplex::from_simplices({{2, 0, 1}});
    CHECK(tri.count(0) == 3);
    CHECK(tri.count(1) == 3);
    CHECK(tri.count(2) == 1);
    CHECK(tri.contains({0, 2}));
    CHECK_FALSE(tri.contains({0, 3}));
    CHECK(tri.euler_characteristic() == 1);
    CHECK_THROWS_AS(SimplicialComplex::from_simplices({{1, 1, 2}}), PreconditionError);
    CHECK(cat::seven_vertex_torus().count(1) == 21);
    CHECK(cat::seven_vertex_torus().count(2) == 14);
}

TEST_CASE("Betti numbers of catalog complexes") {
    CHECK(cohomology(cat::tetrahedron_boundary()).dimensions == std::vector<std::size_t>{1, 0, 1});
    CHECK(cohomology(cat::seven_vertex_torus()).dimensions == std::vector<std::size_t>{1, 2, 1});
    CHECK(cohomology(cat::point()).dimensions == std::vector<std::size_t>{1});
    CHECK(cohomology(cat::polygon(6)).dimensions == std::vector<std::size_t>{1, 1});
    CHECK_THROWS_AS(cohomology(SimplicialComplex{}), PreconditionError);

    std::vector<SimplicialComplex> all{cat::tetrahedron_boundary(), cat::seven_vertex_torus(), cat::polygon(5),
                                       cat::disk(6), cat::grid_torus(3, 4), cat::RingSphere{4}.complex()};
    for (const auto& k : all) REQUIRE(cohomology(k).dimensions == betti_oracle(k.facets()));
}

TEST_CASE("induced endomorphisms on the circle and sphere") {
    SimplicialComplex s2 = cat::tetrahedron_boundary();
    auto id = induced_endomorphism(SimplicialMap::identity(s2));
    REQUIRE(id.endomorphism.size() == 3);
    CHECK(is_identity(id.endomorphism[0]));
    CHECK(id.endomorphism[1].rows() == 0);
    CHECK(is_identity(id.endomorphism[2]));

    SimplicialComplex c6 = cat::polygon(6);
    auto rot = induced_endomorphism(SimplicialMap::self_map(c6, cat::polygon_rotation(6, 3)));
    CHECK(rot.endomorphism[0](0, 0) == 1);
    CHECK(rot.endomorphism[1](0, 0) == circle_degree_oracle(cat::polygon_rotation(6, 3), 6));
    CHECK(rot.endomorphism[1](0, 0) == 1);

    auto refl = induced_endomorphism(SimplicialMap::self_map(c6, cat::polygon_reflection(6)));
    CHECK(refl.endomorphism[0](0, 0) == 1);
    CHECK(refl.endomorphism[1](0, 0) == circle_degree_oracle(cat::polygon_reflection(6), 6));
    CHECK(refl.endomorphism[1](0, 0) == -1);

    for (int k = 0; k < 6; ++k)
        REQUIRE(induced_endomorphism(SimplicialMap::self_map(c6, cat::polygon_rotation(6, k))).endomorphism[1](0, 0) ==
                circle_degree_oracle(cat::polygon_rotation(6, k), 6));
}

TEST_CASE("non-simplicial vertex maps are rejected") {
    SimplicialComplex c6 = cat::polygon(6);
    std::map<Vertex, Vertex> bad = cat::polygon_rotation(6, 0);
    bad[1] = 3;  // edge {0,1} would map to {0,3}
    CHECK_THROWS_AS(SimplicialMap::self_map(c6, bad), PreconditionError);
    bad.erase(1);
    CHECK_THROWS_AS(SimplicialMap::self_map(c6, bad), PreconditionError);
}

TEST_CASE("Lefschetz numbers") {
    CHECK(lefschetz_number(SimplicialMap::identity(cat::tetrahedron_boundary())) == 2);
    CHECK(lefschetz_number(SimplicialMap::identity(cat::seven_vertex_torus())) == 0);
    CHECK(lefschetz_number(SimplicialMap::self_map(cat::polygon(6), cat::polygon_reflection(6))) == 2);

    // Euler consistency.
    std::vector<SimplicialComplex> all{cat::tetrahedron_boundary(), cat::seven_vertex_torus(), cat::disk(5),
                                       cat::grid_torus(3, 3), cat::RingSphere{3}.complex()};
    for (const auto& k : all) {
        auto betti = betti_oracle(k.facets());
        long chi = 0;
        for (std::size_t i = 0; i < betti.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long>(betti[i]);
        REQUIRE(lefschetz_number(SimplicialMap::identity(k)) == chi);
        REQUIRE(k.euler_characteristic() == chi);
    }
}

TEST_CASE("ring sphere symmetries") {
    cat::RingSphere s{6};
    SimplicialComplex k = s.complex();
    CHECK(cohomology(k).dimensions == std::vector<std::size_t>{1, 0, 1});
    // Rotations have degree 1 at every step count: the homotopy-invariance surrogate.
    for (int steps = 0; steps < 6; ++steps)
        REQUIRE(lefschetz_number(SimplicialMap::self_map(k, s.rotation(steps))) == 2);
    CHECK(lefschetz_number(SimplicialMap::self_map(k, s.reflection())) == 0);
}

TEST_CASE("functoriality") {
    cat::RingSphere s{4};
    SimplicialComplex k = s.complex();
    SimplicialMap r = SimplicialMap::self_map(k, s.rotation(1));
    SimplicialMap f = SimplicialMap::self_map(k, s.reflection());
    for (const auto& [a, b] : {std::pair{r, f}, std::pair{f, r}, std::pair{r, r}}) {
        auto composite = induced_endomorphism(compose(a, b));
        auto ia = induced_endomorphism(a);
        auto ib = induced_endomorphism(b);
        for (std::size_t d = 0; d < composite.endomorphism.size(); ++d)
            // Cohomology is contravariant: (a o b)^* = b^* a^*.
            REQUIRE(composite.endomorphism[d] == ib.endomorphism[d] * ia.endomorphism[d]);
    }

    SimplicialComplex t = cat::seven_vertex_torus();
    std::map<Vertex, Vertex> shift;
    for (int i = 0; i < 7; ++i) shift[i] = (i + 1) % 7;
    SimplicialMap g = SimplicialMap::self_map(t, shift);
    SimplicialMap g7 = g;
    for (int i = 1; i < 7; ++i) g7 = compose(g, g7);
    for (const auto& m : induced_endomorphism(g7).endomorphism) REQUIRE(is_identity(m));
    auto ig = induced_endomorphism(g);
    auto power = linalg::RationalMatrix::identity(2);
    for (int i = 0; i < 7; ++i) power = power * ig.endomorphism[1];
    CHECK(is_identity(power));
}

TEST_CASE("relative cohomology") {
    SimplicialComplex d = cat::disk(6);
    SimplicialComplex boundary = cat::polygon(6);
    CHECK(relative_cohomology(d, boundary).dimensions == std::vector<std::size_t>{0, 0, 1});

    SimplicialComplex s2 = cat::tetrahedron_boundary();
    CHECK(relative_cohomology(s2, cat::point()).dimensions == std::vector<std::size_t>{0, 0, 1});
    CHECK(relative_cohomology(s2, SimplicialComplex{}).dimensions == cohomology(s2).dimensions);

    SimplicialComplex not_sub = SimplicialComplex::from_simplices({{0, 9}});
    CHECK_THROWS_AS(relative_cohomology(s2, not_sub), PreconditionError);
    // Not full: three vertices of a triangle without its interior.
    SimplicialComplex hollow = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(relative_cohomology(s2, hollow), PreconditionError);

    cat::RingSphere s{6};
    SimplicialComplex k = s.complex();
    for (const auto& sub : {s.south_cap(), s.north_cap(), cat::point(), SimplicialComplex{}}) {
        std::set<Simplex> removed;
        for (int dd = 0; dd <= sub.dimension(); ++dd)
            for (const auto& x : sub.simplices(dd)) removed.insert(x);
        auto rel = relative_cohomology(k, sub);
        REQUIRE(rel.dimensions.size() == 3);
        std::vector<std::size_t> oracle = betti_oracle(k.facets(), removed);
        oracle.resize(3, 0);
        REQUIRE(rel.dimensions == oracle);
        // Long exact sequence: chi(k, sub) = chi(k) - chi(sub).
        long chi_sub = sub.empty() ? 0 : cohomology(sub).euler_characteristic();
        REQUIRE(rel.euler_characteristic() == cohomology(k).euler_characteristic() - chi_sub);
    }

    // Trace on H^2_c of the open disk around the north pole is +1 for the rotations.
    for (int steps = 0; steps < 6; ++steps) {
        SimplicialMap r = SimplicialMap::self_map(k, s.rotation(steps));
        REQUIRE(lefschetz_number(r, s.south_cap()) == 1);
    }
    SimplicialComplex both = k.full_subcomplex([&] {
        std::vector<Vertex> vs{s.north(), s.south()};
        for (int i = 0; i < 6; ++i) {
            vs.push_back(s.upper(i));
            vs.push_back(s.lower(i));
        }
        return vs;
    }());
    CHECK(relative_cohomology(k, both).euler_characteristic() == 0);
    CHECK(lefschetz_number(SimplicialMap::identity(k), both) == 0);
    CHECK_THROWS_AS(lefschetz_number(SimplicialMap::self_map(k, s.reflection()), s.south_cap()), PreconditionError);
}

TEST_CASE("text format round trip") {
    SimplicialComplex k = parse_complex_string("# a triangle and a stray edge\n0 1 2\n\n2 3  # tail\n");
    CHECK(k.count(0) == 4);
    CHECK(k.count(2) == 1);
    std::ostringstream out;
    write_complex(out, cat::seven_vertex_torus());
    CHECK(parse_complex_string(out.str()) == cat::seven_vertex_torus());
    try {
        parse_complex_string("0 1\n1 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    SimplicialComplex c = cat::polygon(4);
    SimplicialMap f = parse_map_string("0 1\n1 2\n2 3\n3 0\n", c, c);
    CHECK(f(3) == 0);
    CHECK_THROWS_AS(parse_map_string("0 1\n0 2\n", c, c), ParseError);
    CHECK_THROWS_AS(parse_map_string("0 1 2\n", c, c), ParseError);
}
