#include "lefschetz/numberfield/field.hpp"

#include "lefschetz/linalg/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace lefschetz::numberfield {

using linalg::Interval;

namespace {

struct Ball {
    ComplexRational center;
    Rational radius = 0;
};

Rational modulus_upper(const ComplexRational& z) {
    Rational n = norm2(z);
    return n == 0 ? Rational(0) : sqrt_upper(n, 40);
}

// Coefficients of prod (x - z_i) over the chosen discs, as complex balls.
std::vector<Ball> subset_product(const CertifiedRoots& roots, std::uint32_t mask) {
    std::vector<Ball> c{Ball{{1, 0}, 0}};
    for (std::size_t i = 0; i < roots.discs.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        const RootDisc& d = roots.discs[i];
        Rational zmod = modulus_upper(d.center);
        std::vector<Ball> next(c.size() + 1);
        for (std::size_t j = 0; j <= c.size(); ++j) {
            Ball b;
            if (j >= 1) {
                b.center = c[j - 1].center;
                b.radius = c[j - 1].radius;
            }
            if (j < c.size()) {
                b.center = b.center - d.center * c[j].center;
                b.radius += zmod * c[j].radius + d.radius * (modulus_upper(c[j].center) + c[j].radius);
            }
            next[j] = b;
        }
        c = std::move(next);
    }
    return c;
}

// Integer polynomial compatible with the balls, if any.
std::optional<Polynomial> integer_candidate(const std::vector<Ball>& balls) {
    std::vector<Rational> coeffs;
    for (const Ball& b : balls) {
        if (abs(b.center.im) > b.radius) return std::nullopt;
        Rational m(round_nearest(b.center.re));
        if (abs(b.center.re - m) > b.radius) return std::nullopt;
        coeffs.push_back(m);
    }
    return Polynomial(std::move(coeffs));
}

bool closed_under_conjugation(const CertifiedRoots& roots, std::uint32_t mask) {
    for (std::size_t i = 0; i < roots.discs.size(); ++i)
        if ((mask & (1u << i)) && !(mask & (1u << roots.conjugate_of(i)))) return false;
    return true;
}

Rational square_lower(const Interval& x) {
    if (x.contains(Rational(0))) return 0;
    Rational a = abs(x.lo()), b = abs(x.hi());
    Rational m = a < b ? a : b;
    return m * m;
}

bool disc_meets_box(const RootDisc& d, const Interval& re, const Interval& im) {
    Rational dist2 = square_lower(re - Interval(d.center.re)) + square_lower(im - Interval(d.center.im));
    return dist2 <= d.radius * d.radius;
}

long mod_inverse(long a, long n) {
    for (long b = 1; b <= n; ++b)
        if ((a * b) % n == 1 % n) return b;
    throw PreconditionError(std::to_string(a) + " is not invertible mod " + std::to_string(n));
}

long reduce_label(long k, long n) {
    long r = k % n;
    return r <= 0 ? r + n : r;
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& m) {
    std::vector<std::size_t> inv(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        ensure(inv[m[i]] == m.size(), "root map is not a bijection");
        inv[m[i]] = i;
    }
    return inv;
}

PlacePermutation from_root_map(const NumberField& k, std::size_t sigma, const std::vector<std::size_t>& root_map,
                               std::string route) {
    // root_map[i] = j means iota_i o sigma = iota_j, so p o sigma^{-1} uses the inverse.
    std::vector<std::size_t> inv = invert(root_map);
    const ArchimedeanPlaceSet& places = k.places();
    PlacePermutation out;
    out.automorphism = k.automorphism(sigma).name;
    out.route = std::move(route);
    for (std::size_t p = 0; p < places.size(); ++p) {
        std::size_t q = places.place_of_root[inv[places.places[p].root]];
        out.permutation.push_back(q);
        if (q == p) ++out.fixed_count;
    }
    std::vector<std::size_t> sorted = out.permutation;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t p = 0; p < sorted.size(); ++p) ensure(sorted[p] == p, "place action is not a bijection");
    return out;
}

Polynomial cyclotomic_polynomial(int n) {
    Polynomial p = Polynomial::monomial(static_cast<std::size_t>(n)) - Polynomial::constant(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divmod(p, cyclotomic_polynomial(d)).quotient;
    return p;
}

}  // namespace

bool is_squarefree_integer(long d) {
    if (d == 0) return false;
    long m = d < 0 ? -d : d;
    for (long p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0) return false;
    return true;
}

long euler_phi(long n) {
    require(n >= 1, "euler_phi needs n >= 1");
    long count = 0;
    for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

ArchimedeanPlaceSet archimedean_places(const Polynomial& f) {
    ArchimedeanPlaceSet out;
    out.roots = certify_roots(f);
    const auto& discs = out.roots.discs;
    std::vector<std::size_t> real_discs;
    for (std::size_t i = 0; i < discs.size(); ++i)
        if (discs[i].is_real()) real_discs.push_back(i);

    std::size_t sturm = sturm_real_root_count(f);
    ensure(sturm == real_discs.size(), "Sturm count " + std::to_string(sturm) + " disagrees with " +
                                           std::to_string(real_discs.size()) + " real root discs for " + f.to_string());

    // Tie each Sturm interval to the unique real disc it meets.
    std::vector<Interval> intervals;
    std::vector<std::size_t> match;
    for (unsigned bits = 16;; bits *= 2) {
        if (bits > 1024) throw PrecisionError("precision exhausted matching real roots of " + f.to_string());
        intervals = isolate_real_roots(f, bits);
        match.assign(intervals.size(), 0);
        bool unique = true;
        for (std::size_t r = 0; r < intervals.size() && unique; ++r) {
            std::size_t hits = 0;
            for (std::size_t i : real_discs) {
                const RootDisc& d = discs[i];
                if (intervals[r].lo() < d.center.re + d.radius && d.center.re - d.radius <= intervals[r].hi()) {
                    ++hits;
                    match[r] = i;
                }
            }
            unique = hits == 1;
        }
        if (unique) break;
    }

    out.place_of_root.assign(discs.size(), 0);
    for (std::size_t r = 0; r < intervals.size(); ++r) {
        ensure(r == 0 || match[r] != match[r - 1], "two Sturm intervals share a root disc");
        Place p;
        p.real = true;
        p.root = p.conjugate_root = match[r];
        p.real_interval = intervals[r];
        out.place_of_root[match[r]] = out.places.size();
        out.places.push_back(p);
    }
    out.r1 = out.places.size();
    for (std::size_t i = 0; i < discs.size(); ++i) {
        if (discs[i].center.im <= 0) continue;
        Place p;
        p.real = false;
        p.root = i;
        p.conjugate_root = out.roots.conjugate_of(i);
        out.place_of_root[i] = out.place_of_root[p.conjugate_root] = out.places.size();
        out.places.push_back(p);
    }
    out.r2 = out.places.size() - out.r1;
    ensure(out.r1 + 2 * out.r2 == static_cast<std::size_t>(f.degree()), "r1 + 2 r2 differs from the degree");
    return out;
}

bool is_irreducible(const Polynomial& f) {
    require(f.degree() >= 1, "irreducibility needs a non-constant polynomial");
    const int n = f.degree();
    if (n == 1) return true;
    require(n <= 31, "degree too large for subset search");
    CertifiedRoots roots = certify_roots(f);
    for (;;) {
        bool ambiguous = false;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            int size = std::popcount(mask);
            if (2 * size > n || !closed_under_conjugation(roots, mask)) continue;
            auto candidate = integer_candidate(subset_product(roots, mask));
            if (!candidate) continue;
            if ((f % *candidate).is_zero()) return false;
            ambiguous = true;
        }
        if (!ambiguous) return true;
        if (roots.bits >= 1024) throw PrecisionError("precision exhausted deciding irreducibility of " + f.to_string());
        roots = refine_roots(f, roots, roots.bits * 2);
    }
}

NumberField NumberField::create(std::string name, Polynomial f, std::vector<Automorphism> automorphisms) {
    require(f.degree() >= 1, "defining polynomial must be non-constant");
    require(f.degree() <= max_degree, "defining polynomial degree exceeds " + std::to_string(max_degree));
    require(f.is_monic() && f.has_integer_coefficients(), "defining polynomial must be monic with integer coefficients: " + f.to_string());
    require(is_irreducible(f), "defining polynomial is reducible: " + f.to_string());

    NumberField k;
    k.name_ = std::move(name);
    k.f_ = f;
    Polynomial identity = Polynomial::x() % f;
    k.automorphisms_.push_back({"id", identity, std::nullopt});
    for (auto& a : automorphisms) {
        a.image = a.image % f;
        require(compose_mod(f, a.image, f).is_zero(), "automorphism " + a.name + " does not map a root of f to a root");
        if (a.image == identity) {
            if (a.exponent) k.automorphisms_[0].exponent = a.exponent;
            if (a.name != "id") k.automorphisms_[0].name = a.name;
            continue;
        }
        for (const auto& existing : k.automorphisms_) {
            require(existing.image != a.image, "automorphisms " + existing.name + " and " + a.name + " coincide");
            require(existing.name != a.name, "duplicate automorphism name " + a.name);
        }
        k.automorphisms_.push_back(std::move(a));
    }
    const std::size_t m = k.automorphisms_.size();
    require(m <= static_cast<std::size_t>(f.degree()), "more automorphisms than the degree allows");
    k.composition_.assign(m, std::vector<std::size_t>(m, m));
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            // (s o t)(x) = t(x) evaluated at s(x).
            Polynomial image = compose_mod(k.automorphisms_[t].image, k.automorphisms_[s].image, f);
            for (std::size_t u = 0; u < m; ++u)
                if (k.automorphisms_[u].image == image) k.composition_[s][t] = u;
            require(k.composition_[s][t] < m, "automorphisms are not closed under composition: " + k.automorphisms_[s].name +
                                                  " o " + k.automorphisms_[t].name);
        }
    k.places_ = std::make_shared<const ArchimedeanPlaceSet>(archimedean_places(f));
    return k;
}

std::size_t NumberField::automorphism_index(const std::string& name) const {
    std::string known;
    for (std::size_t i = 0; i < automorphisms_.size(); ++i) {
        if (automorphisms_[i].name == name) return i;
        known += (i ? ", " : "") + automorphisms_[i].name;
    }
    throw PreconditionError("unknown automorphism '" + name + "' of " + name_ + " (known: " + known + ")");
}

std::size_t NumberField::compose(std::size_t sigma, std::size_t tau) const { return composition_.at(sigma).at(tau); }

std::size_t NumberField::order(std::size_t sigma) const {
    std::size_t power = sigma, n = 1;
    while (power != identity_index()) {
        power = compose(power, sigma);
        ++n;
    }
    return n;
}

PlacePermutation place_action_numeric(const NumberField& k, std::size_t sigma, unsigned max_bits) {
    const Polynomial& f = k.defining_polynomial();
    const Polynomial& g = k.automorphism(sigma).image;
    CertifiedRoots roots = k.places().roots;
    for (;;) {
        const std::size_t n = roots.discs.size();
        std::vector<std::size_t> image(n, n);
        bool ambiguous = false;
        for (std::size_t i = 0; i < n && !ambiguous; ++i) {
            const RootDisc& d = roots.discs[i];
            ComplexRational w = evaluate(g, d.center);
            // |g(z) - g(c)| <= sum_j j |g_j| (|c| + r)^{j-1} r on the disc.
            Rational reach = modulus_upper(d.center) + d.radius;
            Rational lipschitz = 0, power = 1;
            for (std::size_t j = 1; j < g.coefficients().size(); ++j) {
                lipschitz += Rational(static_cast<long>(j)) * abs(g.coefficients()[j]) * power;
                power *= reach;
            }
            Rational spread = lipschitz * d.radius;
            std::size_t hits = 0;
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = spread + roots.discs[j].radius;
                if (norm2(w - roots.discs[j].center) <= s * s) {
                    ++hits;
                    image[i] = j;
                }
            }
            ensure(hits > 0, "automorphism image left every root disc");
            ambiguous = hits > 1;
        }
        if (!ambiguous) return from_root_map(k, sigma, image, "certified-discs");
        if (roots.bits * 2 > max_bits)
            throw PrecisionError("precision exhausted matching place images under " + k.automorphism(sigma).name);
        roots = refine_roots(f, roots, roots.bits * 2);
    }
}

PlacePermutation place_action(const NumberField& k, std::size_t sigma) {
    PlacePermutation numeric = place_action_numeric(k, sigma);
    PlacePermutation out = numeric;
    if (auto n = k.cyclotomic_order()) {
        const auto& labels = k.cyclotomic_labels();
        const Automorphism& a = k.automorphism(sigma);
        ensure(a.exponent.has_value(), "cyclotomic automorphism without exponent");
        // iota_k o sigma_a = iota_{k a}.
        std::vector<std::size_t> image(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            long target = reduce_label(labels[i] * *a.exponent, *n);
            auto it = std::find(labels.begin(), labels.end(), target);
            ensure(it != labels.end(), "cyclotomic label out of range");
            image[i] = static_cast<std::size_t>(it - labels.begin());
        }
        out = from_root_map(k, sigma, image, "cyclotomic-exact");
        ensure(out.permutation == numeric.permutation, "exact and certified place actions disagree for " + a.name);
    }
    std::size_t ord = k.order(sigma);
    std::vector<std::size_t> power(out.permutation.size());
    std::iota(power.begin(), power.end(), 0);
    for (std::size_t i = 0; i < ord; ++i)
        for (auto& p : power) p = out.permutation[p];
    for (std::size_t p = 0; p < power.size(); ++p) ensure(power[p] == p, "place permutation order does not divide the automorphism order");
    return out;
}

NumberField rationals() { return NumberField::create("Q", Polynomial{0, 1}, {}); }

NumberField quadratic(long d) {
    require(d != 1 && is_squarefree_integer(d), "quadratic field needs squarefree d != 0, 1; got " + std::to_string(d));
    NumberField k;
    std::string name = "Q(sqrt(" + std::to_string(d) + "))";
    if (((d % 4) + 4) % 4 == 1)
        k = NumberField::create(name, Polynomial{Rational(-(d - 1) / 4), -1, 1}, {{"sigma", Polynomial{1, -1}, std::nullopt}});
    else
        k = NumberField::create(name, Polynomial{Rational(-d), 0, 1}, {{"sigma", Polynomial{0, -1}, std::nullopt}});
    k.quadratic_d_ = d;
    return k;
}

NumberField cyclotomic(int n) {
    require(n >= 1, "cyclotomic order must be positive");
    require(euler_phi(n) <= NumberField::max_degree, "cyclotomic field degree exceeds " + std::to_string(NumberField::max_degree));
    Polynomial f = cyclotomic_polynomial(n);
    std::vector<Automorphism> autos;
    std::vector<long> units;
    for (long a = 1; a <= n; ++a)
        if (std::gcd(a, static_cast<long>(n)) == 1) units.push_back(a);
    for (long a : units) autos.push_back({std::to_string(a), Polynomial::monomial(static_cast<std::size_t>(a)), a});
    NumberField k = NumberField::create("Q(zeta_" + std::to_string(n) + ")", f, autos);
    k.cyclotomic_n_ = n;

    const auto& discs = k.places().roots.discs;
    k.cyclotomic_labels_.assign(discs.size(), 0);
    std::vector<bool> used(discs.size(), false);
    for (long label : units) {
        Interval angle = linalg::pi_enclosure(96) * Interval(Rational(2 * label, n));
        Interval re = linalg::cos_enclosure(angle, 80), im = linalg::sin_enclosure(angle, 80);
        std::size_t hits = 0, where = 0;
        for (std::size_t i = 0; i < discs.size(); ++i)
            if (disc_meets_box(discs[i], re, im)) ++hits, where = i;
        if (hits != 1 || used[where]) throw PrecisionError("precision exhausted labelling the roots of " + f.to_string());
        used[where] = true;
        k.cyclotomic_labels_[where] = label;
    }
    return k;
}

NumberField biquadratic() {
    // alpha = sqrt2 + sqrt3, sqrt2 = (alpha^3 - 9 alpha)/2, sqrt3 = (11 alpha - alpha^3)/2.
    return NumberField::create("Q(sqrt(2),sqrt(3))", Polynomial{1, 0, -10, 0, 1},
                               {{"s2", Polynomial{0, 10, 0, -1}, std::nullopt},
                                {"s3", Polynomial{0, -10, 0, 1}, std::nullopt},
                                {"s23", Polynomial{0, -1}, std::nullopt}});
}

std::vector<NumberField> field_catalog() {
    std::vector<NumberField> out{rationals()};
    for (long d = -30; d <= 30; ++d)
        if (d != 1 && is_squarefree_integer(d)) out.push_back(quadratic(d));
    for (int n = 1; n <= 12; ++n) out.push_back(cyclotomic(n));
    out.push_back(biquadratic());
    return out;
}

NumberField field_by_name(const std::string& spec, int line) {
    std::istringstream in(spec);
    std::string head;
    in >> head;
    auto integer_argument = [&]() {
        std::string token;
        if (!(in >> token)) throw ParseError("field '" + spec + "' needs an integer argument", line);
        try {
            std::size_t used = 0;
            long v = std::stol(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            return v;
        } catch (const std::exception&) {
            throw ParseError("field '" + spec + "': '" + token + "' is not an integer", line);
        }
    };
    NumberField k;
    if (head == "Q" || head == "rationals") k = rationals();
    else if (head == "quad" || head == "sqrt") k = quadratic(integer_argument());
    else if (head == "zeta") k = cyclotomic(static_cast<int>(integer_argument()));
    else if (head == "biquad") k = biquadratic();
    else throw PreconditionError("unknown field '" + spec + "' (expected Q, quad <d>, zeta <n>, biquad)");
    std::string rest;
    if (in >> rest) throw ParseError("trailing text in field '" + spec + "'", line);
    return k;
}

}  // namespace lefschetz::numberfield
