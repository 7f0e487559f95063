#pragma once

#include "lefschetz/linalg/interval.hpp"
#include "lefschetz/numberfield/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace lefschetz::numberfield {

/// Signed remainder sequence f, f', -rem(f, f'), ...
/// Throws PreconditionError naming gcd(f, f') when f is not squarefree.
std::vector<Polynomial> sturm_sequence(const Polynomial& f);

/// Number of sign changes of the sequence at x, zeros skipped.
int sign_variations(const std::vector<Polynomial>& sequence, const Rational& x);
/// Same at -infinity (towards_positive = false) or +infinity.
int sign_variations_at_infinity(const std::vector<Polynomial>& sequence, bool towards_positive);

/// Distinct real roots of a squarefree f.
std::size_t sturm_real_root_count(const Polynomial& f);
/// Distinct real roots of a squarefree f in the half-open interval (a, b].
std::size_t sturm_root_count(const Polynomial& f, const Rational& a, const Rational& b);

/// 1 + max |a_i / a_n|; every complex root has modulus strictly below it.
Rational cauchy_bound(const Polynomial& f);

/// Disjoint intervals [lo, hi], ascending, each holding exactly one real root
/// of f in (lo, hi], with width at most 2^-bits.
std::vector<linalg::Interval> isolate_real_roots(const Polynomial& f, unsigned bits = 32);

struct ComplexRational {
    Rational re = 0;
    Rational im = 0;

    bool operator==(const ComplexRational& other) const = default;
};
ComplexRational operator+(const ComplexRational& a, const ComplexRational& b);
ComplexRational operator-(const ComplexRational& a, const ComplexRational& b);
ComplexRational operator*(const ComplexRational& a, const ComplexRational& b);
ComplexRational operator/(const ComplexRational& a, const ComplexRational& b);
inline ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }
/// |z|^2.
inline Rational norm2(const ComplexRational& z) { return z.re * z.re + z.im * z.im; }
ComplexRational evaluate(const Polynomial& p, const ComplexRational& z);

/// A closed disc known to contain exactly one root of the polynomial.
/// Real discs have a real center; their root is real by conjugate symmetry.
struct RootDisc {
    ComplexRational center;
    Rational radius;

    bool is_real() const { return center.im == 0; }
    bool contains(const ComplexRational& z) const;
};

/// Pairwise disjoint isolating discs for all roots of a squarefree f, ordered
/// real roots first (ascending), then non-real roots by (re, im). Non-real
/// discs avoid the real axis and come in exact conjugate pairs.
struct CertifiedRoots {
    std::vector<RootDisc> discs;
    unsigned bits = 0;

    /// Index of the disc whose center is the conjugate of disc i.
    std::size_t conjugate_of(std::size_t i) const;
};

/// Aberth iteration in long double, followed by exact Newton refinement and the
/// inclusion theorem radius n|f(z_i)| / |a_n prod_{j != i}(z_i - z_j)|.
/// Throws PrecisionError("precision exhausted ...") if no certificate is found
/// by max_bits.
CertifiedRoots certify_roots(const Polynomial& f, unsigned min_bits = 64, unsigned max_bits = 1024);

/// Refines existing discs to at least `bits`; each new disc lies inside the old one,
/// so indices keep referring to the same roots.
CertifiedRoots refine_roots(const Polynomial& f, const CertifiedRoots& roots, unsigned bits);

}  // namespace lefschetz::numberfield
