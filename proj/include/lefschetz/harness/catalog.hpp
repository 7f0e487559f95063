#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lefschetz::harness {

struct IdentityInfo {
    std::string tag;
    std::string statement;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> keys;  // config keys understood by the case runner
};

const std::vector<IdentityInfo>& identities();
std::optional<IdentityInfo> identity_info(const std::string& tag);

struct CatalogSection {
    std::string name;
    std::vector<std::string> entries;
};

/// Built-in fields, flows, complexes and identities.
std::vector<CatalogSection> list_catalog();

}  // namespace lefschetz::harness
