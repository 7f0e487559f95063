#include "lefschetz/harness/suite.hpp"

#include "lefschetz/ends/ends.hpp"
#include "lefschetz/filtered/filtered.hpp"
#include "lefschetz/filtered/place_model.hpp"
#include "lefschetz/flows/catalog.hpp"
#include "lefschetz/numberfield/av_model.hpp"
#include "lefschetz/numberfield/finite.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

namespace lefschetz::harness {

using nlohmann::ordered_json;
using numberfield::NumberField;

namespace {

std::vector<std::string> words(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

[[noreturn]] void bad_value(const ConfigEntry& e, const std::string& why) {
    throw ParseError("key '" + e.key + "': " + why, e.line);
}

// Either a catalog name ("field = zeta 5") or an explicit polynomial with
// automorphisms given as image polynomials ("automorphism.sigma = 0, -1").
struct FieldDecl {
    std::optional<std::string> catalog_name;
    int line = 0;
    std::string name;
    numberfield::Polynomial f;
    std::vector<numberfield::Automorphism> automorphisms;

    NumberField build() const {
        if (catalog_name) return numberfield::field_by_name(*catalog_name, line);
        return NumberField::create(name, f, automorphisms);
    }
};

FieldDecl field_decl(const CaseConfig& c) {
    FieldDecl d;
    const ConfigEntry* named = c.find("field");
    const ConfigEntry* poly = c.find("polynomial");
    if (named && poly) throw ParseError("give either 'field' or 'polynomial', not both", poly->line);
    if (named) {
        d.catalog_name = named->value;
        d.line = named->line;
        return d;
    }
    if (!poly) throw ParseError("case '" + c.id() + "' declares no field ('field' or 'polynomial')", c.line());
    d.line = poly->line;
    d.name = c.value_or("name", "custom");
    d.f = numberfield::parse_coefficients(poly->value, poly->line);
    for (const ConfigEntry* a : c.with_prefix("automorphism.")) {
        std::string name = a->key.substr(std::string("automorphism.").size());
        if (name.empty()) bad_value(*a, "automorphism name is empty");
        d.automorphisms.push_back({name, numberfield::parse_coefficients(a->value, a->line), std::nullopt});
    }
    return d;
}

// "all", "nontrivial" (every automorphism but the identity, or the identity
// when it is alone), an automorphism name, or "a mod n" for cyclotomic fields.
std::vector<std::size_t> select_automorphisms(const NumberField& k, const std::string& spec, int line) {
    std::vector<std::size_t> out;
    if (spec == "all" || spec == "nontrivial") {
        for (std::size_t i = 0; i < k.automorphisms().size(); ++i)
            if (spec == "all" || i != k.identity_index() || k.automorphisms().size() == 1) out.push_back(i);
        return out;
    }
    std::vector<std::string> w = words(spec);
    if (w.size() == 3 && w[1] == "mod") {
        if (!k.cyclotomic_order()) throw ParseError("'a mod n' needs a cyclotomic field", line);
        Rational a = parse_rational(w[0], line), n = parse_rational(w[2], line);
        if (!is_integer(a) || n != *k.cyclotomic_order())
            throw ParseError("automorphism '" + spec + "' does not belong to " + k.name(), line);
        long m = *k.cyclotomic_order();
        long r = ((numerator(a).convert_to<long>() % m) + m) % m;
        return {k.automorphism_index(std::to_string(r))};
    }
    return {k.automorphism_index(spec)};
}

std::vector<Rational> grid_or(const CaseConfig& c, std::vector<Rational> fallback) {
    const ConfigEntry* g = c.find("grid");
    if (!g) return fallback;
    std::vector<Rational> v = parse_value_list(*g);
    if (v.empty()) bad_value(*g, "time grid is empty");
    return v;
}

std::vector<Rational> default_grid() {
    std::vector<Rational> g;
    for (int i = 1; i <= 20; ++i) g.push_back(Rational(i, 4));
    return g;
}

filtered::PlaceKind place_kind(const CaseConfig& c) {
    const ConfigEntry& e = c.get("kind");
    return filtered::parse_place_kind(e.value, e.line);
}

CaseRunner field_case(const CaseConfig& c, const std::string& tag) {
    FieldDecl decl = field_decl(c);
    const ConfigEntry* sigma_entry = c.find("sigma");
    std::string sigma = sigma_entry ? sigma_entry->value : "nontrivial";
    int sigma_line = sigma_entry ? sigma_entry->line : c.line();
    return [decl, tag, sigma, sigma_line] {
        NumberField k = decl.build();
        std::vector<VerificationReport> out;
        for (std::size_t s : select_automorphisms(k, sigma, sigma_line)) {
            VerificationReport r = tag == "eq14" ? numberfield::verify_eq14(k, s) : numberfield::verify_eq13(k, s);
            r.case_id = k.automorphism(s).name;
            out.push_back(std::move(r));
        }
        if (out.size() == 1) out.front().case_id.clear();
        return out;
    };
}

CaseRunner prepare_eq14(const CaseConfig& c) {
    std::string check = c.value_or("check", "trace");
    if (check == "pell") {
        long d = parse_value_integer(c.get("d"));
        return [d] { return std::vector{numberfield::pell_unit_check(d)}; };
    }
    if (check != "trace") bad_value(*c.find("check"), "eq14 checks are 'trace' and 'pell'");
    return field_case(c, "eq14");
}

CaseRunner prepare_eq17(const CaseConfig& c) {
    std::string check = c.value_or("check", "compact-support");
    if (check == "hochschild-serre") {
        long q = parse_value_integer(c.get("q"));
        linalg::RationalMatrix phi = parse_value_matrix(c.get("phi"));
        linalg::RationalMatrix endo = parse_value_matrix(c.get("endomorphism"));
        return [q, phi, endo] { return std::vector{numberfield::hochschild_serre_check(q, phi, endo)}; };
    }
    if (check == "finite-prime") {
        long q = parse_value_integer(c.get("q"));
        return [q] {
            linalg::GradedTrace g = numberfield::finite_prime_euler(q);
            VerificationReport r =
                make_report("eq17", linalg::alternating_sum(g), "circle-model:H0+H1-of-residue-field", 0, "vanishing-euler-characteristic");
            r.detail["check"] = "finite-prime";
            r.detail["q"] = q;
            return std::vector{r};
        };
    }
    if (check != "compact-support") bad_value(*c.find("check"), "eq17 checks are 'compact-support', 'finite-prime', 'hochschild-serre'");
    FieldDecl decl = field_decl(c);
    std::vector<std::int64_t> primes;
    if (const ConfigEntry* p = c.find("primes"))
        for (const Rational& q : parse_value_list(*p)) {
            if (!is_integer(q) || q < 2) bad_value(*p, "primes must be integers >= 2");
            primes.push_back(numerator(q).convert_to<std::int64_t>());
        }
    return [decl, primes] { return std::vector{numberfield::verify_eq17(decl.build(), primes)}; };
}

CaseRunner prepare_eq18(const CaseConfig& c) {
    FieldDecl decl = field_decl(c);
    return [decl] { return std::vector{numberfield::verify_eq18(decl.build())}; };
}

CaseRunner prepare_eq21(const CaseConfig& c) {
    std::string check = c.value_or("check", "exhaustion");
    if (check == "arithmetic-ends") {
        FieldDecl decl = field_decl(c);
        return [decl] { return std::vector{ends::verify_arithmetic_ends(decl.build())}; };
    }
    if (check != "exhaustion") bad_value(*c.find("check"), "eq21 checks are 'exhaustion' and 'arithmetic-ends'");
    const ConfigEntry& name = c.get("exhaustion");
    std::vector<int> levels{2};
    if (const ConfigEntry* l = c.find("levels")) {
        levels.clear();
        for (const Rational& q : parse_value_list(*l)) {
            if (!is_integer(q) || q < 1 || q > 64) bad_value(*l, "levels must be integers in 1..64");
            levels.push_back(numerator(q).convert_to<int>());
        }
        if (levels.empty()) bad_value(*l, "no levels given");
    }
    std::vector<std::string> files;
    if (const ConfigEntry* f = c.find("files")) files = words(f->value);
    std::string n = name.value;
    return [n, levels, files] {
        ends::ExhaustedComplex x = files.empty() ? ends::exhaustion_by_name(n) : ends::from_files(n, files);
        std::vector<VerificationReport> out;
        for (int level : levels) {
            VerificationReport r = ends::verify_eq21_level(x, level);
            if (levels.size() > 1) r.case_id = "n" + std::to_string(level);
            out.push_back(std::move(r));
        }
        return out;
    };
}

flows::catalog::Params flow_params(const CaseConfig& c) {
    flows::catalog::Params p;
    for (const ConfigEntry* e : c.unread()) p[e->key] = e->value;
    c.mark_all_read();
    return p;
}

CaseRunner prepare_thm25(const CaseConfig& c) {
    std::string id = c.get("flow").value;
    auto system = std::make_shared<flows::FlowSystem>(flows::catalog::make_flow(id, flow_params(c)));
    return [system] { return std::vector{flows::verify_thm25(*system)}; };
}

CaseRunner prepare_cor26(const CaseConfig& c) {
    std::string id = c.get("flow").value;
    const ConfigEntry& region = c.get("region");
    auto system = std::make_shared<flows::FlowSystem>(flows::catalog::make_flow(id, flow_params(c)));
    const simplicial::SimplicialComplex& removed = system->region(region.value);
    return [system, removed] { return std::vector{flows::verify_cor26(*system, removed)}; };
}

CaseRunner prepare_gr_trace(const CaseConfig& c) {
    const ConfigEntry& dim = c.get("dimension");
    long n = parse_value_integer(dim);
    if (n < 1 || n > 64) bad_value(dim, "dimension must lie in 1..64");
    std::vector<std::size_t> jumps;
    if (const ConfigEntry* j = c.find("jumps"))
        for (const Rational& q : parse_value_list(*j)) {
            if (!is_integer(q) || q < 1 || q >= n) bad_value(*j, "jumps must be integers strictly between 0 and the dimension");
            jumps.push_back(numerator(q).convert_to<std::size_t>());
        }
    const ConfigEntry& e = c.get("endomorphism");
    linalg::RationalMatrix m = parse_value_matrix(e);
    if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n))
        bad_value(e, "endomorphism must be " + std::to_string(n) + "x" + std::to_string(n));
    std::optional<linalg::RationalMatrix> inv;
    if (const ConfigEntry* i = c.find("involution")) inv = parse_value_matrix(*i);
    auto space = std::make_shared<filtered::FilteredSpace>(filtered::FilteredSpace::from_jumps(n, jumps, m, inv));
    return [space] { return std::vector{filtered::graded_trace_identity(*space)}; };
}

CaseRunner prepare_eps_pos(const CaseConfig& c) {
    filtered::TangentBlockModel b;
    b.kind = place_kind(c);
    if (const ConfigEntry* e = c.find("leaf_frequency")) b.leaf_frequency = parse_value_rational(*e);
    if (const ConfigEntry* e = c.find("sigma_leaf_turns")) b.sigma_leaf_turns = parse_value_rational(*e);
    if (const ConfigEntry* e = c.find("sigma_transverse")) {
        long s = parse_value_integer(*e);
        if (s != 1 && s != -1) bad_value(*e, "transverse eigenvalue must be 1 or -1");
        b.sigma_transverse = static_cast<int>(s);
    }
    if (const ConfigEntry* e = c.find("sigma_leaf_reflection")) {
        if (e->value != "true" && e->value != "false") bad_value(*e, "expected true or false");
        b.sigma_leaf_reflection = e->value == "true";
    }
    std::vector<Rational> grid = grid_or(c, default_grid());
    return [b, grid] { return std::vector{filtered::epsilon_positivity(b, grid)}; };
}

CaseRunner prepare_kappa(const CaseConfig& c) {
    std::string check = c.value_or("check", "derivative");
    if (check == "period") {
        Rational q = parse_value_rational(c.get("q"));
        return [q] { return std::vector{filtered::verify_period_membership(q)}; };
    }
    filtered::InfinitePlaceModel p{place_kind(c)};
    if (check == "trajectory") {
        Rational x0 = parse_value_rational(c.get("x0"));
        std::vector<Rational> grid = grid_or(c, {0, Rational(1, 2), 1, 2, 4});
        return [p, x0, grid] { return std::vector{filtered::trajectory_convergence(p, x0, grid)}; };
    }
    if (check != "derivative") bad_value(*c.find("check"), "kappa checks are 'derivative', 'trajectory', 'period'");
    std::vector<Rational> grid = grid_or(c, {0, Rational(1, 4), 1, 3});
    return [p, grid] { return std::vector{filtered::kappa_check(p, grid)}; };
}

using Preparer = CaseRunner (*)(const CaseConfig&);

const std::map<std::string, Preparer>& preparers() {
    static const std::map<std::string, Preparer> table{
        {"thm2.5", prepare_thm25},
        {"cor2.6", prepare_cor26},
        {"eq13", [](const CaseConfig& c) { return field_case(c, "eq13"); }},
        {"eq14", prepare_eq14},
        {"eq17", prepare_eq17},
        {"eq18", prepare_eq18},
        {"eq21", prepare_eq21},
        {"gr-trace", prepare_gr_trace},
        {"eps-pos", prepare_eps_pos},
        {"kappa", prepare_kappa},
    };
    return table;
}

int category_code(Error::Category c) {
    switch (c) {
        case Error::Category::input: return 2;
        case Error::Category::precision:
        case Error::Category::internal: return 3;
    }
    return 3;
}

const char* category_name(Error::Category c) {
    switch (c) {
        case Error::Category::input: return "input";
        case Error::Category::precision: return "precision";
        case Error::Category::internal: return "internal";
    }
    return "internal";
}

}  // namespace

CaseRunner prepare_case(const CaseConfig& c) {
    const ConfigEntry& identity = c.get("identity");
    auto it = preparers().find(identity.value);
    if (it == preparers().end()) throw ParseError("unknown identity '" + identity.value + "'", identity.line);
    CaseRunner runner;
    try {
        runner = it->second(c);
    } catch (const ParseError&) {
        throw;
    } catch (const PreconditionError& e) {
        throw ParseError("case '" + c.id() + "': " + e.what(), c.line());
    }
    std::vector<const ConfigEntry*> left = c.unread();
    if (!left.empty()) throw ParseError("key '" + left.front()->key + "' is not used by identity '" + identity.value + "'", left.front()->line);
    std::string id = c.id(), tag = identity.value;
    return [runner, id, tag] {
        std::vector<VerificationReport> out = runner();
        for (auto& r : out) {
            r.case_id = r.case_id.empty() ? id : id + "/" + r.case_id;
            ensure(r.identity == tag, "case '" + id + "' produced identity '" + r.identity + "'");
        }
        return out;
    };
}

SuiteResult run_suite(const SuiteConfig& config, unsigned jobs) {
    std::vector<CaseRunner> runners;
    for (const auto& c : config.cases) runners.push_back(prepare_case(c));

    std::vector<std::vector<VerificationReport>> reports(runners.size());
    std::vector<std::optional<CaseError>> errors(runners.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < runners.size();) {
            try {
                reports[i] = runners[i]();
            } catch (const Error& e) {
                errors[i] = CaseError{config.cases[i].id(), e.category(), e.what()};
            } catch (const std::exception& e) {
                errors[i] = CaseError{config.cases[i].id(), Error::Category::internal, e.what()};
            }
        }
    };
    unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(runners.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    SuiteResult result;
    for (std::size_t i = 0; i < runners.size(); ++i) {
        for (auto& r : reports[i]) result.reports.push_back(std::move(r));
        if (errors[i]) result.errors.push_back(*errors[i]);
    }
    std::stable_sort(result.reports.begin(), result.reports.end(),
                     [](const auto& a, const auto& b) { return a.case_id < b.case_id; });
    std::stable_sort(result.errors.begin(), result.errors.end(),
                     [](const auto& a, const auto& b) { return a.case_id < b.case_id; });
    return result;
}

SuiteResult run_suite(const std::string& path, unsigned jobs) { return run_suite(parse_config_file(path), jobs); }

SuiteConfig select_cases(const SuiteConfig& config, const std::vector<std::string>& ids) {
    SuiteConfig out;
    for (const auto& id : ids) {
        auto it = std::find_if(config.cases.begin(), config.cases.end(), [&](const CaseConfig& c) { return c.id() == id; });
        require(it != config.cases.end(), "no case with id '" + id + "' in the config");
        if (std::none_of(out.cases.begin(), out.cases.end(), [&](const CaseConfig& c) { return c.id() == id; }))
            out.cases.push_back(*it);
    }
    std::sort(out.cases.begin(), out.cases.end(), [](const auto& a, const auto& b) { return a.id() < b.id(); });
    return out;
}

std::size_t SuiteResult::count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [v](const auto& r) { return r.verdict == v; }));
}

int SuiteResult::exit_code() const {
    int code = count(Verdict::unequal) > 0 ? 1 : 0;
    for (const auto& e : errors) code = std::max(code, category_code(e.category));
    return code;
}

ordered_json SuiteResult::to_json() const {
    ordered_json j;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(lefschetz::to_json(r));
    j["errors"] = ordered_json::array();
    for (const auto& e : errors) j["errors"].push_back({{"case", e.case_id}, {"category", category_name(e.category)}, {"message", e.message}});
    j["summary"] = {{"reports", reports.size()},
                    {"equal", count(Verdict::equal)},
                    {"unequal", count(Verdict::unequal)},
                    {"inconclusive", count(Verdict::inconclusive)},
                    {"errors", errors.size()},
                    {"exit_code", exit_code()}};
    return j;
}

std::string SuiteResult::summary_table() const {
    std::size_t w_case = 4, w_id = 8, w_lhs = 3, w_rhs = 3;
    for (const auto& r : reports) {
        w_case = std::max(w_case, r.case_id.size());
        w_id = std::max(w_id, r.identity.size());
        w_lhs = std::max(w_lhs, to_string(r.lhs).size());
        w_rhs = std::max(w_rhs, to_string(r.rhs).size());
    }
    std::ostringstream out;
    auto row = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d, const std::string& e) {
        out << std::left << std::setw(static_cast<int>(w_case)) << a << "  " << std::setw(static_cast<int>(w_id)) << b << "  "
            << std::right << std::setw(static_cast<int>(w_lhs)) << c << "  " << std::setw(static_cast<int>(w_rhs)) << d << "  " << e
            << "\n";
    };
    row("case", "identity", "lhs", "rhs", "verdict");
    for (const auto& r : reports) {
        std::string verdict = to_string(r.verdict);
        if (r.verdict == Verdict::inconclusive && r.detail.contains("reason")) verdict += " (" + r.detail["reason"].get<std::string>() + ")";
        row(r.case_id, r.identity, to_string(r.lhs), to_string(r.rhs), verdict);
    }
    for (const auto& e : errors) out << "error in case " << e.case_id << " [" << category_name(e.category) << "]: " << e.message << "\n";
    out << reports.size() << " reports: " << count(Verdict::equal) << " equal, " << count(Verdict::unequal) << " unequal, "
        << count(Verdict::inconclusive) << " inconclusive; " << errors.size() << " errors\n";
    return out.str();
}

}  // namespace lefschetz::harness
