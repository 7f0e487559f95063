#pragma once

#include "lefschetz/linalg/rational.hpp"

#include "json.hpp"

#include <string>
#include <utility>

namespace lefschetz {

enum class Verdict { equal, unequal, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::equal: return "equal";
        case Verdict::unequal: return "unequal";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

/// One instance of a trace identity: both sides, where each came from, and the verdict.
struct VerificationReport {
    std::string case_id;
    std::string identity;  // one of the identity tags listed by the catalog
    Rational lhs = 0;
    std::string lhs_provenance;
    Rational rhs = 0;
    std::string rhs_provenance;
    Verdict verdict = Verdict::inconclusive;
    nlohmann::ordered_json detail = nlohmann::ordered_json::object();

    bool passed() const noexcept { return verdict != Verdict::unequal; }
};

/// Verdict is `equal` exactly when the two sides agree.
inline VerificationReport make_report(std::string identity, Rational lhs, std::string lhs_provenance,
                                      Rational rhs, std::string rhs_provenance) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.verdict = lhs == rhs ? Verdict::equal : Verdict::unequal;
    r.lhs = std::move(lhs);
    r.lhs_provenance = std::move(lhs_provenance);
    r.rhs = std::move(rhs);
    r.rhs_provenance = std::move(rhs_provenance);
    return r;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["case"] = r.case_id;
    j["identity"] = r.identity;
    j["lhs"] = to_string(r.lhs);
    j["lhs_provenance"] = r.lhs_provenance;
    j["rhs"] = to_string(r.rhs);
    j["rhs_provenance"] = r.rhs_provenance;
    j["verdict"] = to_string(r.verdict);
    j["detail"] = r.detail;
    return j;
}

}  // namespace lefschetz
