#include "doctest.h"

#include "lefschetz/harness/catalog.hpp"
#include "lefschetz/harness/suite.hpp"

#include <algorithm>
#include <sstream>

using namespace lefschetz;
using namespace lefschetz::harness;

namespace {

SuiteConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

int parse_error_line(const std::string& text) {
    try {
        SuiteConfig c = parse(text);
        for (const auto& k : c.cases) prepare_case(k);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("config parsing") {
    SuiteConfig c = parse("# header\n\n[case a]\nidentity = eq18  # trailing\nfield = Q\n[case b/c]\nidentity = kappa\nkind = real\n");
    REQUIRE(c.cases.size() == 2);
    CHECK(c.cases[0].id() == "a");
    CHECK(c.cases[0].get("field").value == "Q");
    CHECK(c.cases[0].get("field").line == 5);
    CHECK(c.cases[1].id() == "b/c");
    CHECK(parse("").cases.empty());
}

TEST_CASE("schema violations carry line numbers") {
    CHECK(parse_error_line("identity = eq18\n") == 1);
    CHECK(parse_error_line("[case a]\nidentity = eq18\n[case a]\n") == 3);
    CHECK(parse_error_line("[case a]\nidentity = eq18\nidentity = eq14\n") == 3);
    CHECK(parse_error_line("[case a]\nfield Q\n") == 2);
    CHECK(parse_error_line("[case a\n") == 1);
    CHECK(parse_error_line("[suite a]\n") == 1);
    CHECK(parse_error_line("[case a]\nidentity = eq99\n") == 2);
    CHECK(parse_error_line("[case a]\nidentity = eq18\nfield = Q\nextra = 1\n") == 4);
    CHECK(parse_error_line("[case a]\nidentity = eq18\n") == 1);
    CHECK(parse_error_line("[case a]\nidentity = gr-trace\ndimension = 2\nendomorphism = 1, 2; 3\n") == 4);
    CHECK(parse_error_line("[case a]\nidentity = gr-trace\ndimension = 2\njumps = 1\nendomorphism = 1, 0; 3, 4\n") == 1);
    CHECK(parse_error_line("[case a]\nidentity = eps-pos\nkind = p-adic\n") == 3);
    CHECK(parse_error_line("[case a]\nidentity = eq17\nfield = Q\nprimes = 2, x\n") == 4);
    CHECK(parse_error_line("[case a]\nidentity = thm2.5\nflow = s2-rotation\nspin = 1\n") == 1);
}

TEST_CASE("suite runs are ordered by case id and deterministic") {
    std::string text =
        "[case z]\nidentity = eq18\nfield = zeta 7\n"
        "[case a]\nidentity = eq14\nfield = quad -1\nsigma = all\n"
        "[case m]\nidentity = kappa\nkind = complex\n";
    SuiteResult one = run_suite(parse(text), 1);
    SuiteResult four = run_suite(parse(text), 4);
    REQUIRE(one.reports.size() == 4);
    CHECK(one.reports[0].case_id == "a/id");
    CHECK(one.reports[1].case_id == "a/sigma");
    CHECK(one.reports[2].case_id == "m");
    CHECK(one.reports[3].case_id == "z");
    CHECK(one.to_json().dump() == four.to_json().dump());
    CHECK(one.exit_code() == 0);
}

TEST_CASE("sqrt 2 single-case suite") {
    SuiteResult r = run_suite(parse("[case eq14-sqrt2]\nidentity = eq14\nfield = quad 2\n"));
    REQUIRE(r.reports.size() == 1);
    CHECK(r.reports[0].lhs == 0);
    CHECK(r.reports[0].rhs == 0);
    CHECK(r.reports[0].verdict == Verdict::equal);
}

TEST_CASE("exit codes from case outcomes") {
    CHECK(run_suite(parse("")).exit_code() == 0);
    SuiteResult bad_field = run_suite(parse("[case a]\nidentity = eq18\npolynomial = -1, 0, 1\n"));
    REQUIRE(bad_field.errors.size() == 1);
    CHECK(bad_field.errors[0].case_id == "a");
    CHECK(bad_field.exit_code() == 2);
    SuiteResult tree = run_suite(parse("[case t]\nidentity = eq21\nexhaustion = tree\nlevels = 2\n"));
    CHECK(tree.count(Verdict::inconclusive) == 1);
    CHECK(tree.exit_code() == 0);
    // A removed set containing the source is rejected rather than reported unequal.
    SuiteResult source = run_suite(parse("[case s]\nidentity = cor2.6\nflow = s1-gradient\nregion = source\n"));
    CHECK(source.exit_code() == 2);
    // Non-commuting Frobenius data is an input error.
    SuiteResult hs = run_suite(parse("[case h]\nidentity = eq17\ncheck = hochschild-serre\nq = 3\nphi = 0, 1; 1, 0\nendomorphism = 1, 0; 0, 2\n"));
    CHECK(hs.exit_code() == 2);
}

TEST_CASE("explicit fields and cyclotomic automorphism syntax") {
    SuiteResult r = run_suite(parse(
        "[case i]\nidentity = eq14\nname = Q(i)\npolynomial = 1, 0, 1\nautomorphism.conj = 0, -1\nsigma = conj\n"
        "[case z]\nidentity = eq13\nfield = zeta 5\nsigma = 9 mod 5\n"));
    REQUIRE(r.reports.size() == 2);
    CHECK(r.reports[0].lhs == 1);
    CHECK(r.reports[0].verdict == Verdict::equal);
    CHECK(r.reports[1].detail["automorphism"] == "4");
    CHECK(r.reports[1].verdict == Verdict::equal);
    CHECK(run_suite(parse("[case z]\nidentity = eq13\nfield = zeta 5\nsigma = 2 mod 7\n")).exit_code() == 2);
}

TEST_CASE("catalog listing") {
    auto sections = list_catalog();
    auto section = [&](const std::string& name) {
        auto it = std::find_if(sections.begin(), sections.end(), [&](const auto& s) { return s.name == name; });
        REQUIRE(it != sections.end());
        return it->entries;
    };
    auto flows = section("flows");
    for (const char* f : {"s2-rotation", "t2-translation", "s1-gradient"})
        CHECK(std::find(flows.begin(), flows.end(), f) != flows.end());
    auto fields = section("fields");
    CHECK(std::any_of(fields.begin(), fields.end(), [](const std::string& s) { return s.rfind("quad(d)", 0) == 0; }));
    CHECK(std::any_of(fields.begin(), fields.end(), [](const std::string& s) { return s.rfind("zeta(n)", 0) == 0; }));
    CHECK(section("identities") ==
          std::vector<std::string>{"thm2.5", "cor2.6", "eq13", "eq14", "eq17", "eq18", "eq21", "gr-trace", "eps-pos", "kappa"});
    for (const auto& tag : section("identities")) CHECK(identity_info(tag).has_value());
}
