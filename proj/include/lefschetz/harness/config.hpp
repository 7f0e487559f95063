#pragma once

#include "lefschetz/linalg/matrix.hpp"

#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lefschetz::harness {

struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

/// One `[case <id>]` section. Accessors record which keys were read so that
/// leftover keys can be reported as schema violations.
class CaseConfig {
public:
    CaseConfig(std::string id, int line) : id_(std::move(id)), line_(line) {}

    const std::string& id() const noexcept { return id_; }
    int line() const noexcept { return line_; }
    const std::vector<ConfigEntry>& entries() const noexcept { return entries_; }
    void add(ConfigEntry e);

    bool has(const std::string& key) const;
    const ConfigEntry* find(const std::string& key) const;
    /// Throws ParseError at the section header when the key is missing.
    const ConfigEntry& get(const std::string& key) const;
    std::string value_or(const std::string& key, const std::string& fallback) const;
    /// Entries whose key starts with `prefix`, in file order.
    std::vector<const ConfigEntry*> with_prefix(const std::string& prefix) const;
    /// Everything not read so far, in file order.
    std::vector<const ConfigEntry*> unread() const;
    void mark_all_read() const;

private:
    std::string id_;
    int line_;
    std::vector<ConfigEntry> entries_;
    mutable std::set<std::string> read_;
};

struct SuiteConfig {
    std::vector<CaseConfig> cases;
};

/// Key-table format:
///
///     # comment
///     [case eq14-sqrt2]
///     identity = eq14
///     field = quad 2
///
/// Case ids are unique and made of [A-Za-z0-9._/-]; keys are unique per case.
SuiteConfig parse_config(std::istream& in);
SuiteConfig parse_config_file(const std::string& path);

/// Value parsers; errors carry the entry's line.
Rational parse_value_rational(const ConfigEntry& e);
long parse_value_integer(const ConfigEntry& e);
/// Comma or whitespace separated rationals; brackets are ignored.
std::vector<Rational> parse_value_list(const ConfigEntry& e);
/// Rows separated by ';', entries by ',' or whitespace.
linalg::RationalMatrix parse_value_matrix(const ConfigEntry& e);

}  // namespace lefschetz::harness
