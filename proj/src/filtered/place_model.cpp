#include "lefschetz/filtered/place_model.hpp"

#include "lefschetz/flows/tangent.hpp"
#include "lefschetz/linalg/error.hpp"

#include <algorithm>
#include <set>

namespace lefschetz::filtered {

using linalg::Interval;
using lefschetz::to_string;
using nlohmann::ordered_json;

namespace {

void require_grid(const std::vector<Rational>& grid, bool allow_zero) {
    require(!grid.empty(), "time grid is empty");
    for (const auto& t : grid) require(allow_zero ? t >= 0 : t > 0, "time grid entries must be positive; got " + to_string(t));
}

ordered_json grid_json(const std::vector<Rational>& grid) {
    ordered_json j = ordered_json::array();
    for (const auto& t : grid) j.push_back(to_string(t));
    return j;
}

}  // namespace

bool ExpValue::operator==(const ExpValue& other) const {
    if (coeff == 0 || other.coeff == 0) return coeff == other.coeff;
    return coeff == other.coeff && exponent == other.exponent;
}

Interval ExpValue::enclosure(unsigned bits) const {
    if (coeff == 0) return Interval(Rational(0));
    return Interval(coeff) * linalg::exp_enclosure(exponent, bits);
}

const char* to_string(PlaceKind k) { return k == PlaceKind::real ? "real" : "complex"; }

PlaceKind parse_place_kind(const std::string& text, int line) {
    if (text == "real") return PlaceKind::real;
    if (text == "complex") return PlaceKind::complex;
    throw ParseError("place kind must be 'real' or 'complex', got '" + text + "'", line);
}

Rational kappa(PlaceKind k) { return k == PlaceKind::complex ? Rational(-1) : Rational(-2); }

ExpValue InfinitePlaceModel::flow(const ExpValue& r, const Rational& t) const {
    ExpValue p = normalize(r);
    if (p.coeff == 0) return p;
    return {p.coeff, p.exponent + rate() * t};
}

ExpValue InfinitePlaceModel::normalize(const ExpValue& r) const {
    if (r.coeff == 0) return {0, 0};
    if (kind == PlaceKind::real) return {abs(r.coeff), r.exponent};
    return r;
}

TrajectoryPoint embed(const InfinitePlaceModel& p, const ExpValue& r) {
    ExpValue v = p.normalize(r);
    TrajectoryPoint x;
    if (v.coeff == 0) return x;
    x.sign = sign(v.coeff);
    Rational c = abs(v.coeff);
    if (c != 1) {
        x.log_of = c;
        x.log_scale = 1 / p.rate();
    }
    x.shift = v.exponent / p.rate();
    return x;
}

TrajectoryPoint flow(const TrajectoryPoint& x, const Rational& t) {
    TrajectoryPoint y = x;
    if (y.sign != 0) y.shift += t;
    return y;
}

VerificationReport kappa_check(const InfinitePlaceModel& p, const std::vector<Rational>& t_grid) {
    require_grid(t_grid, true);
    const ExpValue h{Rational(1, 1000), 0};
    std::optional<Rational> observed;
    bool consistent = true;
    ordered_json samples = ordered_json::array();
    for (const Rational& t : t_grid) {
        ExpValue image = p.flow(h, t);
        ExpValue multiplier{image.coeff / h.coeff, image.exponent};
        ordered_json s{{"t", to_string(t)}, {"multiplier", multiplier.enclosure(64).to_string()}};
        if (t == 0) {
            consistent = consistent && multiplier == ExpValue{1, 0};
        } else {
            consistent = consistent && multiplier.coeff == 1;
            Rational k = multiplier.exponent / t;
            s["kappa"] = to_string(k);
            if (observed && *observed != k) consistent = false;
            observed = k;
        }
        samples.push_back(s);
    }
    Rational lhs = observed.value_or(p.rate());
    if (!consistent) lhs = 0;
    VerificationReport r = make_report("kappa", lhs, "model-flow-derivative-at-fixed-point", kappa(p.kind), "place-kind");
    r.detail["kind"] = to_string(p.kind);
    r.detail["samples"] = samples;
    r.detail["consistent"] = consistent;
    return r;
}

VerificationReport epsilon_positivity(const TangentBlockModel& b, const std::vector<Rational>& t_grid, unsigned max_bits) {
    require_grid(t_grid, false);
    require(!b.sigma_leaf_reflection, "leaf reflections have real eigenvalues +-1 and are excluded");
    require(b.sigma_transverse == 1 || b.sigma_transverse == -1, "transverse sigma eigenvalue must be +-1");

    using flows::TangentEntry;
    using flows::TangentMatrix;
    using flows::Term;
    const Rational k = kappa(b.kind);
    TangentMatrix transverse(1);
    transverse(0, 0) = TangentEntry({Term{Rational(b.sigma_transverse), k}});
    TangentMatrix t_map = TangentMatrix::direct_sum(TangentMatrix::rotation(b.leaf_frequency, b.sigma_leaf_turns, Rational(1, 2)), transverse);

    int certified = 1, closed_form = 1;
    ordered_json samples = ordered_json::array();
    for (const Rational& t : t_grid) {
        int s = 0;
        unsigned bits = 64;
        Interval det;
        for (; bits <= max_bits; bits *= 2) {
            det = linalg::determinant(linalg::IntervalMatrix::identity(3) - t_map.evaluate(t, bits));
            s = det.certified_sign();
            if (s != 0) break;
        }
        if (s == 0) throw PrecisionError("undecidable sign of det(1 - T) at t = " + to_string(t));
        // Transverse factor 1 -+ e^{kappa t}; the leaf factor (1 - e^{t/2})^2 + 2 e^{t/2} (1 - cos a) is positive for t > 0.
        int transverse_sign = (Interval(Rational(1)) - Interval(Rational(b.sigma_transverse)) * linalg::exp_enclosure(k * t, 64)).certified_sign();
        ensure(transverse_sign != 0, "transverse factor sign undecided");
        if (s < 0) certified = -1;
        if (transverse_sign < 0) closed_form = -1;
        samples.push_back({{"t", to_string(t)}, {"det", det.to_string()}, {"sign", s}, {"bits", bits}});
    }
    VerificationReport r = make_report("eps-pos", certified, "interval-determinant-sign-on-grid", closed_form,
                                       "closed-form-transverse-and-leaf-factors");
    r.detail["kind"] = to_string(b.kind);
    r.detail["kappa"] = to_string(k);
    r.detail["leaf_frequency"] = to_string(b.leaf_frequency);
    r.detail["sigma_leaf_turns"] = to_string(b.sigma_leaf_turns);
    r.detail["sigma_transverse"] = b.sigma_transverse;
    r.detail["samples"] = samples;
    if (certified < 0) r.detail["counterexample"] = true;
    return r;
}

VerificationReport trajectory_convergence(const InfinitePlaceModel& p, const Rational& x0, const std::vector<Rational>& t_grid) {
    require_grid(t_grid, true);
    std::vector<Rational> grid = t_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    bool decreasing = true, equivariant = true;
    std::set<int> orbits;
    ordered_json values = ordered_json::array();
    for (const Rational& start : {x0, Rational(-x0)}) {
        ExpValue r{start, 0};
        TrajectoryPoint base = embed(p, r);
        if (base.sign != 0) orbits.insert(base.sign);
        std::optional<Interval> previous;
        for (const Rational& t : grid) {
            ExpValue moved = p.flow(r, t);
            equivariant = equivariant && embed(p, moved) == flow(base, t);
            Interval size = ExpValue{abs(moved.coeff), moved.exponent}.enclosure(64);
            if (previous && x0 != 0 && !(size.hi() < previous->lo())) decreasing = false;
            if (x0 == 0 && moved.coeff != 0) decreasing = false;
            previous = size;
            if (start == x0) values.push_back({{"t", to_string(t)}, {"abs", size.to_string()}});
        }
    }
    Rational expected = x0 == 0 ? Rational(0) : Rational(p.kind == PlaceKind::complex ? 2 : 1);
    VerificationReport r = make_report("kappa", Rational(static_cast<long>(orbits.size())), "distinct-inflowing-orbits-of-plus-minus-x0",
                                       expected, "place-kind");
    if (!decreasing || !equivariant) r.verdict = Verdict::unequal;
    r.detail["check"] = "trajectory";
    r.detail["kind"] = to_string(p.kind);
    r.detail["x0"] = to_string(x0);
    r.detail["monotone_to_fixed_point"] = decreasing;
    r.detail["equivariant"] = equivariant;
    r.detail["grid"] = grid_json(grid);
    r.detail["values"] = values;
    return r;
}

std::map<std::int64_t, int> period_membership(const Rational& q) {
    require(q > 0, "periods come from positive rationals; got " + to_string(q));
    const Integer limit("1000000000000");
    require(numerator(q) <= limit && denominator(q) <= limit, "rational too large for trial division: " + to_string(q));
    std::map<std::int64_t, int> exponents;
    auto factor = [&](std::int64_t n, int sign) {
        for (std::int64_t p = 2; p * p <= n; ++p)
            while (n % p == 0) exponents[p] += sign, n /= p;
        if (n > 1) exponents[n] += sign;
    };
    factor(numerator(q).convert_to<std::int64_t>(), 1);
    factor(denominator(q).convert_to<std::int64_t>(), -1);
    return exponents;
}

VerificationReport verify_period_membership(const Rational& q) {
    std::map<std::int64_t, int> e = period_membership(q);
    Rational rebuilt = 1;
    ordered_json j = ordered_json::object();
    for (const auto& [p, k] : e) {
        rebuilt *= pow(Rational(p), k);
        j[std::to_string(p)] = k;
    }
    VerificationReport r = make_report("kappa", rebuilt, "product-of-prime-powers", q, "input-period");
    r.detail["check"] = "period-group";
    r.detail["exponents"] = j;
    return r;
}

}  // namespace lefschetz::filtered
