#include "lefschetz/numberfield/roots.hpp"

#include "lefschetz/linalg/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace lefschetz::numberfield {

namespace {

int sign_at_infinity(const Polynomial& p, bool towards_positive) {
    if (p.is_zero()) return 0;
    int s = sign(p.leading());
    if (!towards_positive && p.degree() % 2 != 0) s = -s;
    return s;
}

int count_variations(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

void require_squarefree(const Polynomial& f) {
    require(!f.is_zero(), "the zero polynomial has no root count");
    Polynomial g = gcd(f, derivative(f));
    if (g.degree() > 0)
        throw PreconditionError("polynomial " + f.to_string() + " is not squarefree: gcd(f, f') = " + g.to_string());
}

Rational dyadic(const Rational& x, unsigned bits) {
    Rational scale = pow(Rational(2), static_cast<std::int64_t>(bits));
    return Rational(round_nearest(x * scale)) / scale;
}

ComplexRational dyadic(const ComplexRational& z, unsigned bits) { return {dyadic(z.re, bits), dyadic(z.im, bits)}; }

Rational from_long_double(long double x) {
    double hi = static_cast<double>(x);
    double lo = static_cast<double>(x - static_cast<long double>(hi));
    return from_double(hi) + from_double(lo);
}

using Cld = std::complex<long double>;

std::vector<Cld> aberth(const Polynomial& f) {
    const int n = f.degree();
    std::vector<long double> a(f.coefficients().size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<long double>(to_double(f.coefficients()[i]));
    auto eval = [&](Cld z, Cld& deriv) {
        Cld p = 0, dp = 0;
        for (int i = n; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + a[static_cast<std::size_t>(i)];
        }
        deriv = dp;
        return p;
    };
    // Start on a circle of the geometric-mean root modulus, with an offset angle.
    long double radius = std::pow(std::abs(a[0] / a[static_cast<std::size_t>(n)]) + 1e-3L, 1.0L / n);
    std::vector<Cld> z(static_cast<std::size_t>(n));
    const long double tau = 6.283185307179586476925286766559L;
    for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(radius, tau * k / n + 0.4L);
    for (int iter = 0; iter < 2000; ++iter) {
        long double largest = 0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            Cld dp;
            Cld p = eval(z[k], dp);
            if (p == Cld(0)) continue;
            Cld ratio = p / dp;
            Cld s = 0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) s += Cld(1) / (z[k] - z[j]);
            Cld step = ratio / (Cld(1) - ratio * s);
            z[k] -= step;
            largest = std::max(largest, std::abs(step) / (1 + std::abs(z[k])));
        }
        if (largest < 1e-18L) break;
    }
    return z;
}

// Newton steps in exact arithmetic, rounding the iterate to `bits` after each step.
ComplexRational newton(const Polynomial& f, const Polynomial& df, ComplexRational z, unsigned bits) {
    Rational tolerance = pow(Rational(2), -2 * static_cast<std::int64_t>(bits));
    for (int iter = 0; iter < 12; ++iter) {
        ComplexRational fz = evaluate(f, z);
        if (fz == ComplexRational{}) break;
        ComplexRational dz = evaluate(df, z);
        if (dz == ComplexRational{}) break;
        ComplexRational step = fz / dz;
        z = dyadic(z - step, bits);
        if (norm2(step) < tolerance) break;
    }
    return z;
}

// Squared inclusion radius for each center.
std::vector<Rational> squared_radii(const Polynomial& f, const std::vector<ComplexRational>& z) {
    const std::size_t n = z.size();
    std::vector<Rational> out(n);
    Rational lead2 = f.leading() * f.leading();
    for (std::size_t i = 0; i < n; ++i) {
        ComplexRational prod{1, 0};
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod = prod * (z[i] - z[j]);
        Rational denom = lead2 * norm2(prod);
        if (denom == 0) throw PrecisionError("precision exhausted: coincident root approximations for " + f.to_string());
        out[i] = Rational(static_cast<long>(n * n)) * norm2(evaluate(f, z[i])) / denom;
    }
    return out;
}

// Disjointness, real-axis avoidance of non-real discs; radii returned on success.
bool certify(const Polynomial& f, const std::vector<ComplexRational>& z, unsigned bits, std::vector<Rational>& radii) {
    std::vector<Rational> r2 = squared_radii(f, z);
    radii.assign(z.size(), Rational(0));
    for (std::size_t i = 0; i < z.size(); ++i) {
        radii[i] = r2[i] == 0 ? Rational(0) : sqrt_upper(r2[i], bits + 16);
        if (z[i].im != 0 && !(radii[i] * radii[i] < z[i].im * z[i].im)) return false;
    }
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            Rational sum = radii[i] + radii[j];
            if (!(sum * sum < norm2(z[i] - z[j]))) return false;
        }
    return true;
}

// Runs Newton on the real and upper half-plane centers and mirrors the lower ones.
std::vector<ComplexRational> refine_centers(const Polynomial& f, const std::vector<ComplexRational>& z,
                                            const std::vector<std::size_t>& partner, unsigned bits) {
    Polynomial df = derivative(f);
    std::vector<ComplexRational> out = z;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i].im >= 0) out[i] = newton(f, df, z[i], bits);
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i].im < 0) out[i] = conj(out[partner[i]]);
    return out;
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& f) {
    require_squarefree(f);
    std::vector<Polynomial> seq{f};
    Polynomial next = derivative(f);
    while (!next.is_zero()) {
        seq.push_back(next);
        next = -(seq[seq.size() - 2] % seq.back());
    }
    return seq;
}

int sign_variations(const std::vector<Polynomial>& sequence, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(sequence.size());
    for (const auto& p : sequence) signs.push_back(sign(p(x)));
    return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<Polynomial>& sequence, bool towards_positive) {
    std::vector<int> signs;
    signs.reserve(sequence.size());
    for (const auto& p : sequence) signs.push_back(sign_at_infinity(p, towards_positive));
    return count_variations(signs);
}

std::size_t sturm_real_root_count(const Polynomial& f) {
    auto seq = sturm_sequence(f);
    return static_cast<std::size_t>(sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true));
}

std::size_t sturm_root_count(const Polynomial& f, const Rational& a, const Rational& b) {
    require(a <= b, "root count needs a <= b");
    auto seq = sturm_sequence(f);
    return static_cast<std::size_t>(sign_variations(seq, a) - sign_variations(seq, b));
}

Rational cauchy_bound(const Polynomial& f) {
    require(f.degree() >= 1, "root bound needs a non-constant polynomial");
    Rational m = 0;
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, abs(f.coefficients()[static_cast<std::size_t>(i)] / f.leading()));
    return 1 + m;
}

std::vector<linalg::Interval> isolate_real_roots(const Polynomial& f, unsigned bits) {
    auto seq = sturm_sequence(f);
    std::vector<linalg::Interval> out;
    if (f.degree() < 1) return out;
    Rational width = pow(Rational(2), -static_cast<std::int64_t>(bits));
    Rational b = cauchy_bound(f);
    struct Piece {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Piece> stack{{-b, b, sign_variations(seq, -b), sign_variations(seq, b)}};
    while (!stack.empty()) {
        Piece p = stack.back();
        stack.pop_back();
        int count = p.vlo - p.vhi;
        if (count == 0) continue;
        if (count == 1 && p.hi - p.lo <= width) {
            out.emplace_back(p.lo, p.hi);
            continue;
        }
        Rational mid = (p.lo + p.hi) / 2;
        int vmid = sign_variations(seq, mid);
        // Push the right half first so that the left half is processed first.
        stack.push_back({mid, p.hi, vmid, p.vhi});
        stack.push_back({p.lo, mid, p.vlo, vmid});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo() < y.lo(); });
    return out;
}

ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) { return {a.re + b.re, a.im + b.im}; }
ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) { return {a.re - b.re, a.im - b.im}; }
ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    Rational d = norm2(b);
    require(d != 0, "complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

ComplexRational evaluate(const Polynomial& p, const ComplexRational& z) {
    ComplexRational acc;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) acc = acc * z + ComplexRational{*it, 0};
    return acc;
}

bool RootDisc::contains(const ComplexRational& z) const { return norm2(z - center) <= radius * radius; }

std::size_t CertifiedRoots::conjugate_of(std::size_t i) const {
    if (discs[i].is_real()) return i;
    ComplexRational target = conj(discs[i].center);
    for (std::size_t j = 0; j < discs.size(); ++j)
        if (discs[j].center == target) return j;
    throw InternalError("certified roots lost conjugate symmetry");
}

CertifiedRoots certify_roots(const Polynomial& f, unsigned min_bits, unsigned max_bits) {
    require(f.degree() >= 1, "root isolation needs a non-constant polynomial");
    require_squarefree(f);
    const std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<Cld> approx = aberth(f);

    // Pair each approximation with the one nearest its conjugate.
    std::vector<std::size_t> partner(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        long double best_d = -1;
        for (std::size_t j = 0; j < n; ++j) {
            long double d = std::abs(approx[i] - std::conj(approx[j]));
            if (best_d < 0 || d < best_d) best = j, best_d = d;
        }
        partner[i] = best;
    }
    std::vector<ComplexRational> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (partner[partner[i]] != i) throw PrecisionError("precision exhausted: inconsistent conjugate pairing for " + f.to_string());
        if (partner[i] == i) {
            z[i] = {from_long_double(approx[i].real()), 0};
        } else if (approx[i].imag() > 0) {
            z[i] = {from_long_double(approx[i].real()), from_long_double(approx[i].imag())};
            z[partner[i]] = conj(z[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (partner[i] != i && z[i].im == 0) throw PrecisionError("precision exhausted: non-real pair on the real axis for " + f.to_string());

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        bool ra = z[a].im == 0, rb = z[b].im == 0;
        if (ra != rb) return ra;
        if (z[a].re != z[b].re) return z[a].re < z[b].re;
        return z[a].im < z[b].im;
    });
    std::vector<ComplexRational> sorted(n);
    std::vector<std::size_t> where(n);
    for (std::size_t k = 0; k < n; ++k) sorted[k] = z[order[k]], where[order[k]] = k;
    std::vector<std::size_t> sorted_partner(n);
    for (std::size_t k = 0; k < n; ++k) sorted_partner[k] = where[partner[order[k]]];

    std::vector<Rational> radii;
    for (unsigned bits = std::max(min_bits, 32u); bits <= max_bits; bits *= 2) {
        sorted = refine_centers(f, sorted, sorted_partner, bits);
        if (certify(f, sorted, bits, radii)) {
            CertifiedRoots out;
            out.bits = bits;
            for (std::size_t k = 0; k < n; ++k) out.discs.push_back({sorted[k], radii[k]});
            return out;
        }
    }
    throw PrecisionError("precision exhausted isolating the roots of " + f.to_string());
}

CertifiedRoots refine_roots(const Polynomial& f, const CertifiedRoots& roots, unsigned bits) {
    if (bits <= roots.bits) return roots;
    const std::size_t n = roots.discs.size();
    std::vector<ComplexRational> z(n);
    std::vector<std::size_t> partner(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = roots.discs[i].center, partner[i] = roots.conjugate_of(i);
    z = refine_centers(f, z, partner, bits);
    std::vector<Rational> radii;
    if (!certify(f, z, bits, radii)) throw PrecisionError("precision exhausted refining the roots of " + f.to_string());
    CertifiedRoots out;
    out.bits = bits;
    // The root in new disc i lies in some old disc; meeting only old disc i pins it down.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational reach = roots.discs[j].radius + radii[i];
            bool meets = norm2(z[i] - roots.discs[j].center) <= reach * reach;
            if (meets != (i == j))
                throw PrecisionError("precision exhausted: refined disc lost its root for " + f.to_string());
        }
        out.discs.push_back({z[i], radii[i]});
    }
    return out;
}

}  // namespace lefschetz::numberfield
