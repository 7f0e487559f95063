#include "doctest.h"

#include "lefschetz/ends/ends.hpp"
#include "lefschetz/linalg/error.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <queue>
#include <set>

using namespace lefschetz;
using namespace lefschetz::ends;

namespace {

// Breadth-first count of components of the full subcomplex on the vertices outside `removed`.
std::size_t bfs_components(const SimplicialComplex& window, const SimplicialComplex& removed) {
    std::map<Vertex, std::vector<Vertex>> adj;
    std::set<Vertex> outside;
    for (Vertex v : window.vertices())
        if (!removed.contains_vertex(v)) outside.insert(v), adj[v];
    for (const auto& e : window.simplices(1))
        if (outside.count(e[0]) && outside.count(e[1])) adj[e[0]].push_back(e[1]), adj[e[1]].push_back(e[0]);
    std::set<Vertex> seen;
    std::size_t count = 0;
    for (Vertex s : outside) {
        if (seen.count(s)) continue;
        ++count;
        std::queue<Vertex> q;
        q.push(s);
        seen.insert(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : adj[v])
                if (seen.insert(w).second) q.push(w);
        }
    }
    return count;
}

}  // namespace

TEST_CASE("end counts of the catalog exhaustions") {
    EndProfile l = end_approximation(line(), 6);
    for (int n = 1; n <= 6; ++n) CHECK(l.count(n) == 2);
    CHECK(l.stabilized_at(1));
    CHECK(l.stabilized_from() == 1);

    EndProfile r = end_approximation(ray(), 5);
    for (int n = 1; n <= 5; ++n) CHECK(r.count(n) == 1);

    EndProfile c = end_approximation(cylinder(), 4);
    for (int n = 1; n <= 4; ++n) CHECK(c.count(n) == 2);

    EndProfile t = end_approximation(binary_tree(), 6);
    for (int n = 1; n <= 6; ++n) CHECK(t.count(n) == (std::size_t{1} << n));
    CHECK_FALSE(t.stabilized_from().has_value());
    for (bool s : t.bonding_surjective) CHECK(s);
    // Each component at level n+1 lies in the component of its parent subtree.
    for (std::size_t b : t.bondings[0]) CHECK(b < 2);

    for (const auto& name : exhaustion_names()) {
        ExhaustedComplex x = exhaustion_by_name(name);
        SimplicialComplex window = x.at(6);
        EndProfile p = end_approximation(x, 4);
        for (int n = 1; n <= 4; ++n) {
            INFO(name << " level " << n);
            CHECK(p.count(n) == bfs_components(window, x.at(n)));
        }
    }
}

TEST_CASE("locally constant functions") {
    CHECK(locally_constant_functions(end_approximation(line(), 3), 3) == 2);
    CHECK(locally_constant_functions(end_approximation(ray(), 3), 2, "Q") == 1);
    CHECK(locally_constant_functions(end_approximation(binary_tree(), 3), 3, "Z/5") == 8);
    CHECK_THROWS_AS(locally_constant_functions(end_approximation(line(), 3), 3, "R"), PreconditionError);
    CHECK_THROWS_AS(locally_constant_functions(end_approximation(line(), 3), 4), PreconditionError);
}

TEST_CASE("ends of disjoint unions add") {
    const std::vector<std::string> names = exhaustion_names();
    for (const auto& a : names)
        for (const auto& b : names) {
            EndProfile pa = end_approximation(exhaustion_by_name(a), 3);
            EndProfile pb = end_approximation(exhaustion_by_name(b), 3);
            EndProfile pu = end_approximation(exhaustion_by_name(a + "+" + b), 3);
            for (int n = 1; n <= 3; ++n) CHECK(pu.count(n) == pa.count(n) + pb.count(n));
        }
}

TEST_CASE("end functions match boundary H0 of collared compactifications") {
    for (int n = 1; n <= 5; ++n) {
        VerificationReport l = verify_eq21_level(line(), n);
        CHECK(l.lhs == 2);
        CHECK(l.rhs == 2);
        CHECK(l.verdict == Verdict::equal);
        CHECK(l.detail["collar_components"] == 2);
        VerificationReport r = verify_eq21_level(ray(), n);
        CHECK(r.lhs == 1);
        CHECK(r.verdict == Verdict::equal);
        VerificationReport c = verify_eq21_level(cylinder(), n);
        CHECK(c.lhs == 2);
        CHECK(c.rhs == 2);
        CHECK(c.verdict == Verdict::equal);
    }
    VerificationReport u = verify_eq21_level(exhaustion_by_name("line+cylinder"), 2);
    CHECK(u.lhs == 4);
    CHECK(u.verdict == Verdict::equal);

    VerificationReport t = verify_eq21_level(binary_tree(), 3);
    CHECK(t.verdict == Verdict::inconclusive);
    CHECK(t.lhs == 8);
    CHECK(t.detail["reason"].get<std::string>().find("inconclusive at level 3") != std::string::npos);
    CHECK_THROWS_AS(verify_eq21_level(binary_tree(), 14), PreconditionError);
}

TEST_CASE("exhaustions read from files") {
    auto dir = std::filesystem::temp_directory_path() / "lefschetz_ends_test";
    std::filesystem::create_directories(dir);
    std::vector<std::string> paths;
    for (int n = 1; n <= 5; ++n) {
        auto p = dir / ("level" + std::to_string(n) + ".txt");
        std::ofstream out(p);
        out << "# path " << -n << ".." << n << "\n";
        for (int i = -n; i < n; ++i) out << i << " " << i + 1 << "\n";
        paths.push_back(p.string());
    }
    ExhaustedComplex x = from_files("file-line", paths);
    EndProfile p = end_approximation(x, 4);
    for (int n = 1; n <= 4; ++n) CHECK(p.count(n) == 2);
    CHECK_THROWS_AS(end_approximation(x, 5), PreconditionError);
    VerificationReport r = verify_eq21_level(x, 1);
    CHECK(r.verdict == Verdict::inconclusive);

    CHECK_THROWS_AS(from_levels("bad", {line().at(2), line().at(1)}), PreconditionError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("arithmetic ends count archimedean places") {
    CHECK(arithmetic_ends(numberfield::rationals()) == 1);
    CHECK(arithmetic_ends(numberfield::quadratic(2)) == 2);
    CHECK(arithmetic_ends(numberfield::cyclotomic(5)) == 2);
    for (const auto& k : numberfield::field_catalog()) {
        VerificationReport r = verify_arithmetic_ends(k);
        CHECK(r.verdict == Verdict::equal);
        CHECK(r.lhs == Rational(static_cast<long>(k.places().size())));
    }
}
