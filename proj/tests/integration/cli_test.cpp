#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(LEFSCHETZ_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_config(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("default config: all equal except the tree") {
    Run r = run("verify --config " LEFSCHETZ_DEFAULT_CONFIG " --json --jobs 4");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["unequal"] == 0);
    CHECK(j["summary"]["errors"] == 0);
    for (const auto& rep : j["reports"]) {
        if (rep["verdict"] == "inconclusive") CHECK(rep["case"].get<std::string>().find("tree") != std::string::npos);
        else CHECK(rep["verdict"] == "equal");
    }
    CHECK(j["summary"]["inconclusive"] == 1);
}

TEST_CASE("identical configs give identical payloads") {
    Run a = run("verify --config " LEFSCHETZ_DEFAULT_CONFIG " --json --jobs 1");
    Run b = run("verify --config " LEFSCHETZ_DEFAULT_CONFIG " --json --jobs 8");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("single case selection") {
    Run r = run("verify --config " LEFSCHETZ_DEFAULT_CONFIG " --case eq14-sqrt2 --json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["reports"].size() == 1);
    CHECK(j["reports"][0]["lhs"] == "0");
    CHECK(j["reports"][0]["rhs"] == "0");
    CHECK(run("verify --config " LEFSCHETZ_DEFAULT_CONFIG " --case missing").code == 2);
}

TEST_CASE("exit codes") {
    CHECK(run("verify --config " + write_config("lefschetz_empty.cfg", "")).code == 0);
    CHECK(run("verify --config " + write_config("lefschetz_bad.cfg", "[case a]\nidentity = eq18\nfield == Q\nx\n")).code == 2);
    CHECK(run("verify --config /nonexistent/file.cfg").code == 2);
    CHECK(run("verify").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("explain eq99").code == 2);
    // Leaf reflections are outside the model: an input error.
    CHECK(run("verify --config " + write_config("lefschetz_refl.cfg", "[case e]\nidentity = eps-pos\nkind = real\nsigma_leaf_reflection = true\n")).code == 2);
}

TEST_CASE("catalog and explain") {
    Run c = run("catalog --json");
    CHECK(c.code == 0);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["identities"].size() == 10);
    CHECK(j["flows"].size() >= 3);
    for (const auto& tag : j["identities"]) {
        Run e = run("explain " + tag.get<std::string>());
        CHECK(e.code == 0);
        CHECK(e.out.find("lhs:") != std::string::npos);
        CHECK(e.out.find("rhs:") != std::string::npos);
    }
}
