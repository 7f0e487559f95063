#pragma once

#include "lefschetz/harness/config.hpp"
#include "lefschetz/harness/report.hpp"
#include "lefschetz/linalg/error.hpp"

#include <functional>
#include <string>
#include <vector>

namespace lefschetz::harness {

/// A module error raised while running a case.
struct CaseError {
    std::string case_id;
    Error::Category category = Error::Category::internal;
    std::string message;
};

struct SuiteResult {
    std::vector<VerificationReport> reports;  // sorted by case id
    std::vector<CaseError> errors;            // sorted by case id

    std::size_t count(Verdict v) const;
    /// 0 all fine, 1 some verdict unequal, 2 an input error, 3 a precision or internal error.
    int exit_code() const;
    nlohmann::ordered_json to_json() const;
    std::string summary_table() const;
};

using CaseRunner = std::function<std::vector<VerificationReport>()>;

/// Parses and validates the case's keys up front; throws ParseError on schema
/// violations. The returned runner does the actual computation.
CaseRunner prepare_case(const CaseConfig& c);

/// Validates every case, then runs them on up to `jobs` threads.
/// Reports of multi-instance cases get ids "<case>/<instance>".
SuiteResult run_suite(const SuiteConfig& config, unsigned jobs = 1);
SuiteResult run_suite(const std::string& path, unsigned jobs = 1);

/// Keeps only the cases with the given ids; throws PreconditionError for unknown ids.
SuiteConfig select_cases(const SuiteConfig& config, const std::vector<std::string>& ids);

}  // namespace lefschetz::harness
