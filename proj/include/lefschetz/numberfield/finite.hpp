#pragma once

#include "lefschetz/harness/report.hpp"
#include "lefschetz/linalg/graded_trace.hpp"
#include "lefschetz/linalg/matrix.hpp"
#include "lefschetz/numberfield/field.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lefschetz::numberfield {

bool is_prime(std::int64_t n);
/// (p, e) with q = p^e, or nothing.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q);

/// One prime above p: residue degree f and ramification e read off an
/// irreducible factor g^e of the defining polynomial mod p.
struct ResidueFactor {
    int residue_degree = 0;
    int multiplicity = 0;
};

/// Factorization pattern of f mod p by squarefree and distinct-degree
/// factorization. `exact` is false when p^2 divides disc(f), where the pattern
/// may not describe the primes of the maximal order.
struct ResidueData {
    std::int64_t p = 0;
    std::vector<ResidueFactor> factors;
    bool exact = true;
};
ResidueData residue_data(const NumberField& k, std::int64_t p);

/// Discriminant of a monic polynomial from the resultant with its derivative.
Rational discriminant(const Polynomial& f);

/// Kernel and cokernel of 1 - phi with the traces of a commuting endomorphism.
struct FrobeniusComplex {
    std::size_t h0_dimension = 0;
    std::size_t h1_dimension = 0;
    Rational h0_trace = 0;
    Rational h1_trace = 0;
};
FrobeniusComplex frobenius_complex(const linalg::RationalMatrix& phi, const linalg::RationalMatrix& endo);

/// The circle model of a finite field with q elements: both degrees one-dimensional
/// with Frobenius trace one.
linalg::GradedTrace finite_prime_euler(std::int64_t q);
/// Same for the residue field of degree f over F_p.
linalg::GradedTrace finite_prime_euler(std::int64_t p, int f);

/// chi_c of the S-integers: chi(model) - (r1 + r2) - sum over primes above S, for S
/// and for S enlarged by the least prime outside it.
VerificationReport verify_eq17(const NumberField& k, const std::vector<std::int64_t>& primes);

/// Tr(endo | H^0) - Tr(endo | H^1) of [M --(1 - phi)--> M] against zero.
VerificationReport hochschild_serre_check(std::int64_t q, const linalg::RationalMatrix& phi,
                                          const linalg::RationalMatrix& endo);

}  // namespace lefschetz::numberfield
