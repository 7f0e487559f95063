#include "CLI11.hpp"

#include "lefschetz/harness/catalog.hpp"
#include "lefschetz/harness/suite.hpp"

#include <iostream>
#include <thread>

using namespace lefschetz;

namespace {

int verify(const std::string& config, const std::vector<std::string>& cases, bool json, unsigned jobs) {
    harness::SuiteConfig suite = harness::parse_config_file(config);
    if (!cases.empty()) suite = harness::select_cases(suite, cases);
    harness::SuiteResult result = harness::run_suite(suite, jobs);
    if (json) std::cout << result.to_json().dump(2) << "\n";
    else std::cout << result.summary_table();
    for (const auto& e : result.errors) std::cerr << "case " << e.case_id << ": " << e.message << "\n";
    return result.exit_code();
}

int catalog(bool json) {
    auto sections = harness::list_catalog();
    if (json) {
        nlohmann::ordered_json j;
        for (const auto& s : sections) j[s.name] = s.entries;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& s : sections) {
        std::cout << s.name << ":\n";
        for (const auto& e : s.entries) std::cout << "  " << e << "\n";
    }
    return 0;
}

int explain(const std::string& tag) {
    auto info = harness::identity_info(tag);
    if (!info) {
        std::cerr << "unknown identity tag '" << tag << "'; known tags:";
        for (const auto& i : harness::identities()) std::cerr << " " << i.tag;
        std::cerr << "\n";
        return 2;
    }
    std::cout << info->tag << "\n"
              << "  identity: " << info->statement << "\n"
              << "  lhs:      " << info->lhs << "\n"
              << "  rhs:      " << info->rhs << "\n"
              << "  keys:    ";
    for (const auto& k : info->keys) std::cout << " " << k;
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of Lefschetz trace identities for flows, number fields, ends and filtered spaces"};
    app.require_subcommand(1);

    std::string config;
    std::vector<std::string> cases;
    bool json = false;
    unsigned jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Run the cases of a config file");
    verify_cmd->add_option("--config", config, "Config file")->required();
    verify_cmd->add_option("--case", cases, "Run only this case id (repeatable)");
    verify_cmd->add_flag("--json", json, "Emit structured JSON reports");
    verify_cmd->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)")->check(CLI::Range(0u, 256u));

    bool catalog_json = false;
    auto* catalog_cmd = app.add_subcommand("catalog", "List built-in fields, flows, complexes and identities");
    catalog_cmd->add_flag("--json", catalog_json, "Emit JSON");

    std::string tag;
    auto* explain_cmd = app.add_subcommand("explain", "Describe an identity and the provenance of both sides");
    explain_cmd->add_option("tag", tag, "Identity tag")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify_cmd) {
            if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
            return verify(config, cases, json, jobs);
        }
        if (*catalog_cmd) return catalog(catalog_json);
        return explain(tag);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.category() == Error::Category::input ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
