#include "lefschetz/harness/config.hpp"

#include "lefschetz/linalg/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lefschetz::harness {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool valid_id(const std::string& id) {
    return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '.' || c == '_' || c == '-' || c == '/';
    });
}

bool valid_key(const std::string& key) {
    return !key.empty() && std::all_of(key.begin(), key.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '.' || c == '_' || c == '-';
    });
}

std::vector<std::string> tokens(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(cleaned);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

}  // namespace

void CaseConfig::add(ConfigEntry e) {
    if (has(e.key)) throw ParseError("duplicate key '" + e.key + "' in case '" + id_ + "'", e.line);
    entries_.push_back(std::move(e));
}

bool CaseConfig::has(const std::string& key) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const ConfigEntry& e) { return e.key == key; });
}

const ConfigEntry* CaseConfig::find(const std::string& key) const {
    for (const auto& e : entries_)
        if (e.key == key) {
            read_.insert(key);
            return &e;
        }
    return nullptr;
}

const ConfigEntry& CaseConfig::get(const std::string& key) const {
    const ConfigEntry* e = find(key);
    if (!e) throw ParseError("case '" + id_ + "' is missing the key '" + key + "'", line_);
    return *e;
}

std::string CaseConfig::value_or(const std::string& key, const std::string& fallback) const {
    const ConfigEntry* e = find(key);
    return e ? e->value : fallback;
}

std::vector<const ConfigEntry*> CaseConfig::with_prefix(const std::string& prefix) const {
    std::vector<const ConfigEntry*> out;
    for (const auto& e : entries_)
        if (e.key.rfind(prefix, 0) == 0) {
            read_.insert(e.key);
            out.push_back(&e);
        }
    return out;
}

std::vector<const ConfigEntry*> CaseConfig::unread() const {
    std::vector<const ConfigEntry*> out;
    for (const auto& e : entries_)
        if (!read_.count(e.key)) out.push_back(&e);
    return out;
}

void CaseConfig::mark_all_read() const {
    for (const auto& e : entries_) read_.insert(e.key);
}

SuiteConfig parse_config(std::istream& in) {
    SuiteConfig config;
    std::set<std::string> ids;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string text = trim(raw.substr(0, raw.find('#')));
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']') throw ParseError("unterminated section header", line);
            std::string inner = trim(text.substr(1, text.size() - 2));
            if (inner.rfind("case", 0) != 0 || inner.size() < 5 || (inner[4] != ' ' && inner[4] != '\t'))
                throw ParseError("section headers have the form [case <id>]", line);
            std::string id = trim(inner.substr(4));
            if (!valid_id(id)) throw ParseError("invalid case id '" + id + "'", line);
            if (!ids.insert(id).second) throw ParseError("duplicate case id '" + id + "'", line);
            config.cases.emplace_back(id, line);
            continue;
        }
        auto eq = text.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
        std::string key = trim(text.substr(0, eq));
        if (!valid_key(key)) throw ParseError("invalid key '" + key + "'", line);
        if (config.cases.empty()) throw ParseError("key '" + key + "' appears before any [case <id>] section", line);
        config.cases.back().add({key, trim(text.substr(eq + 1)), line});
    }
    return config;
}

SuiteConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read config file '" + path + "'");
    return parse_config(in);
}

Rational parse_value_rational(const ConfigEntry& e) {
    std::vector<std::string> t = tokens(e.value);
    if (t.size() != 1) throw ParseError("key '" + e.key + "' expects one rational, got '" + e.value + "'", e.line);
    return parse_rational(t[0], e.line);
}

long parse_value_integer(const ConfigEntry& e) {
    Rational q = parse_value_rational(e);
    if (!is_integer(q) || abs(q) > Rational(1L << 40))
        throw ParseError("key '" + e.key + "' expects an integer, got '" + e.value + "'", e.line);
    return numerator(q).convert_to<long>();
}

std::vector<Rational> parse_value_list(const ConfigEntry& e) {
    std::vector<Rational> out;
    for (const auto& t : tokens(e.value)) out.push_back(parse_rational(t, e.line));
    return out;
}

linalg::RationalMatrix parse_value_matrix(const ConfigEntry& e) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(e.value);
    for (std::string row; std::getline(in, row, ';');) {
        std::vector<Rational> r;
        for (const auto& t : tokens(row)) r.push_back(parse_rational(t, e.line));
        if (r.empty()) throw ParseError("key '" + e.key + "' has an empty matrix row", e.line);
        if (!rows.empty() && r.size() != rows.front().size())
            throw ParseError("key '" + e.key + "' has rows of different lengths", e.line);
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw ParseError("key '" + e.key + "' expects a matrix 'a, b; c, d'", e.line);
    linalg::RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace lefschetz::harness
