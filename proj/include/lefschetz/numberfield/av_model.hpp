#pragma once

#include "lefschetz/harness/report.hpp"
#include "lefschetz/linalg/graded_trace.hpp"
#include "lefschetz/numberfield/field.hpp"

#include <array>
#include <cstddef>

namespace lefschetz::numberfield {

/// Trace of sigma on Q[places] with the trivial summand removed, computed as the
/// trace of the permutation matrix restricted to the augmentation kernel.
Rational unit_rep_trace(const NumberField& k, std::size_t sigma);

struct AVDegree {
    std::size_t dimension = 0;
    Rational trace = 0;
};

/// Four-degree Galois-module model: Q; 0; the unit dual of dimension r1 + r2 - 1; 0.
/// A model with the right Euler characteristic and traces, not a computation of
/// etale cohomology.
struct AVCohomologyModel {
    std::array<AVDegree, 4> degrees{};

    Rational euler_characteristic() const;
    Rational lefschetz_trace() const;
    linalg::GradedTrace graded_trace() const;
};

AVCohomologyModel av_model(const NumberField& k, std::size_t sigma);

/// Alternating trace of the model against the number of fixed places.
VerificationReport verify_eq14(const NumberField& k, std::size_t sigma);
/// Same trace against the sum of epsilon signs over fixed places; each sign is
/// the sign of an empty determinant.
VerificationReport verify_eq13(const NumberField& k, std::size_t sigma);
/// Euler characteristic of the model against the certified place count.
VerificationReport verify_eq18(const NumberField& k);

/// Fundamental unit (a + b sqrt d) / denominator of the real quadratic field Q(sqrt d).
struct QuadraticUnit {
    long d = 0;
    Integer a = 0;
    Integer b = 0;
    Integer denominator = 1;
    Integer norm = 0;
    std::size_t convergents = 0;

    std::string to_string() const;
};

/// Continued fraction of sqrt d, or of (sqrt d - 1)/2 when d = 1 mod 4; the first
/// convergent p/q whose associated element has norm +-1. Throws PrecisionError
/// "period bound exceeded" past max_terms.
QuadraticUnit fundamental_unit(long d, std::size_t max_terms = 20000);

/// Pell cross-check of unit_rep_trace for the nontrivial automorphism of Q(sqrt d).
VerificationReport pell_unit_check(long d);

}  // namespace lefschetz::numberfield
