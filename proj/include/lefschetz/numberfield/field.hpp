#pragma once

#include "lefschetz/numberfield/polynomial.hpp"
#include "lefschetz/numberfield/roots.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz::numberfield {

/// x |-> image(x) mod f. For cyclotomic fields `exponent` records zeta |-> zeta^a.
struct Automorphism {
    std::string name;
    Polynomial image;
    std::optional<long> exponent;
};

/// Real places carry the root's Sturm interval; complex places the index of the
/// root in the upper half plane together with its conjugate.
struct Place {
    bool real = true;
    std::size_t root = 0;
    std::size_t conjugate_root = 0;
    linalg::Interval real_interval;
};

struct ArchimedeanPlaceSet {
    CertifiedRoots roots;
    std::vector<Place> places;
    std::vector<std::size_t> place_of_root;
    std::size_t r1 = 0;
    std::size_t r2 = 0;

    std::size_t size() const noexcept { return places.size(); }
};

/// Degree-n field Q[x]/(f) with f monic, integral and irreducible, together with
/// a group of automorphisms closed under composition. Immutable once built.
class NumberField {
public:
    static constexpr int max_degree = 12;

    /// Validates f and the automorphisms and certifies the archimedean places.
    /// An identity automorphism is added in front when missing.
    static NumberField create(std::string name, Polynomial f, std::vector<Automorphism> automorphisms);

    const std::string& name() const noexcept { return name_; }
    const Polynomial& defining_polynomial() const noexcept { return f_; }
    int degree() const noexcept { return f_.degree(); }
    std::size_t r1() const noexcept { return places_->r1; }
    std::size_t r2() const noexcept { return places_->r2; }
    const ArchimedeanPlaceSet& places() const noexcept { return *places_; }

    const std::vector<Automorphism>& automorphisms() const noexcept { return automorphisms_; }
    const Automorphism& automorphism(std::size_t i) const { return automorphisms_.at(i); }
    /// Index by name; throws PreconditionError listing the known names.
    std::size_t automorphism_index(const std::string& name) const;
    std::size_t identity_index() const noexcept { return 0; }
    /// Index of sigma o tau.
    std::size_t compose(std::size_t sigma, std::size_t tau) const;
    std::size_t order(std::size_t sigma) const;

    std::optional<int> cyclotomic_order() const noexcept { return cyclotomic_n_; }
    /// For cyclotomic fields: the k with root i = exp(2 pi i k / n).
    const std::vector<long>& cyclotomic_labels() const noexcept { return cyclotomic_labels_; }
    std::optional<long> quadratic_discriminant_d() const noexcept { return quadratic_d_; }

private:
    friend NumberField cyclotomic(int n);
    friend NumberField quadratic(long d);

    std::string name_;
    Polynomial f_;
    std::vector<Automorphism> automorphisms_;
    std::vector<std::vector<std::size_t>> composition_;
    std::shared_ptr<const ArchimedeanPlaceSet> places_;
    std::optional<int> cyclotomic_n_;
    std::vector<long> cyclotomic_labels_;
    std::optional<long> quadratic_d_;
};

/// Certified places of Q[x]/(f): real roots from Sturm isolation matched to real
/// discs, complex places from conjugate disc pairs.
ArchimedeanPlaceSet archimedean_places(const Polynomial& f);
inline const ArchimedeanPlaceSet& archimedean_places(const NumberField& k) { return k.places(); }

/// True when f has no factor of degree 1..n/2 over the integers. Uses the
/// certified root discs and exact trial division.
bool is_irreducible(const Polynomial& f);

/// The action p |-> p o sigma^{-1} of an automorphism on the places.
struct PlacePermutation {
    std::string automorphism;
    std::vector<std::size_t> permutation;
    std::size_t fixed_count = 0;
    std::string route;
};

/// Cyclotomic fields use the exact rule k |-> k a^{-1} mod n and cross-check the
/// numeric route; all other fields use the numeric route.
PlacePermutation place_action(const NumberField& k, std::size_t sigma);
/// Pushes every root disc through the automorphism polynomial with certified
/// bounds and matches the image to a root, refining up to max_bits.
PlacePermutation place_action_numeric(const NumberField& k, std::size_t sigma, unsigned max_bits = 1024);

// Catalog.
NumberField rationals();
/// Q(sqrt d) for squarefree d != 0, 1. For d = 1 mod 4 the generator is (1 + sqrt d)/2.
NumberField quadratic(long d);
/// Q(zeta_n) with automorphisms named by their exponent a mod n.
NumberField cyclotomic(int n);
/// Q(sqrt 2, sqrt 3) generated by sqrt 2 + sqrt 3.
NumberField biquadratic();
/// Quadratic fields with |d| <= 30, cyclotomic fields with n <= 12, the biquadratic field.
std::vector<NumberField> field_catalog();

/// "Q", "quad <d>", "zeta <n>", "biquad".
NumberField field_by_name(const std::string& spec, int line = 0);

bool is_squarefree_integer(long d);
long euler_phi(long n);

}  // namespace lefschetz::numberfield
