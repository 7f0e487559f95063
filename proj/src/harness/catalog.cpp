#include "lefschetz/harness/catalog.hpp"

#include "lefschetz/ends/exhaustion.hpp"
#include "lefschetz/flows/catalog.hpp"

#include <algorithm>

namespace lefschetz::harness {

const std::vector<IdentityInfo>& identities() {
    static const std::vector<IdentityInfo> table{
        {"thm2.5",
         "sum_i (-1)^i Tr(sigma* | H^i(X; Q)) = sum over x in Fix(phi) with sigma(x) = x of eps_x(sigma), "
         "eps_x(sigma) = lim_{t->0+} sgn det(1 - T_x(phi^t o sigma))",
         "alternating trace of sigma on simplicial cohomology over Q (Smith normal form of the coboundaries)",
         "sum of local signs, each stabilized over a geometric t-grid with certified interval determinants",
         {"flow", "speed", "rate", "rate_y", "vertices", "ring", "grid", "velocity", "sigma"}},
        {"cor2.6",
         "sum_i (-1)^i Tr(sigma* | H^i_c(X - Z; Q)) = sum over fixed points x outside Z of eps_x(sigma), "
         "Z a closed flow-invariant subcomplex",
         "alternating trace of sigma on relative cohomology H^i(X, Z; Q)",
         "local signs of the common fixed points not in Z",
         {"flow", "region", "speed", "rate", "rate_y", "vertices", "ring", "grid", "velocity", "sigma"}},
        {"eq13",
         "sum_i (-1)^i Tr(sigma | H^i) over the model equals the number of archimedean places fixed by sigma, "
         "each counted with the sign of det(1 - T) on its zero-dimensional tangent space",
         "alternating trace of sigma on the Artin-Verdier model",
         "sum over fixed places of the sign of an empty determinant",
         {"field", "polynomial", "name", "automorphism.<name>", "sigma"}},
        {"eq14",
         "Tr(sigma | H^0) + Tr(sigma | H^2) = #{v | infinity : v o sigma^-1 = v} in the model "
         "H^0 = Q, H^2 = Q[S_inf] / Q",
         "trivial H^0 plus the permutation trace on the augmentation kernel of Q[S_inf]",
         "places fixed under the certified place permutation (Sturm isolation, disc pairing, cyclotomic exponents)",
         {"field", "polynomial", "name", "automorphism.<name>", "sigma", "check = trace | pell", "d"}},
        {"eq17",
         "chi_c(Spec o_{k,S}) = chi(model) - #S_inf - sum_{p in S} chi(residue circle at p) = 0, "
         "independent of the finite set of primes S",
         "compactly supported Euler characteristic assembled from the model and the removed points",
         "zero, recomputed after enlarging S by the least prime outside it",
         {"field", "polynomial", "primes", "check = compact-support | finite-prime | hochschild-serre", "q", "phi",
          "endomorphism"}},
        {"eq18",
         "chi(model) = r1 + r2, the number of infinite places",
         "Euler characteristic of the Artin-Verdier model",
         "places from Sturm counts and certified complex root discs",
         {"field", "polynomial", "name", "automorphism.<name>"}},
        {"eq21",
         "H^0 of the end space, the locally constant functions on lim pi_0(X - K_n), equals H^0 of the boundary "
         "of a collared compactification",
         "stabilized number of unbounded complementary components of the exhaustion",
         "H^0 of the boundary subcomplex (simplicial cohomology, cross-checked with union-find)",
         {"exhaustion", "levels", "files", "check = exhaustion | arithmetic-ends", "field"}},
        {"gr-trace",
         "sum_k Tr(e | Gr^k M) = Tr(e | M) for e preserving the filtration",
         "traces of the maps induced on V^k / V^{k+1}",
         "trace of e on M",
         {"dimension", "jumps", "endomorphism", "involution"}},
        {"eps-pos",
         "sgn det(1 - T(phi^t sigma)) = +1 at infinite-place fixed points for every t > 0 on the grid",
         "certified interval determinant of the leaf-plus-transverse tangent block",
         "closed-form sign (1 - s e^{kappa t}) |1 - lambda|^2",
         {"kind", "leaf_frequency", "sigma_leaf_turns", "sigma_transverse", "sigma_leaf_reflection", "grid"}},
        {"kappa",
         "the flow acts on the transverse coordinate at an infinite place by e^{kappa t}, kappa = -1 complex, "
         "kappa = -2 real",
         "difference quotient of the exact model flow at its fixed point",
         "kappa attached to the place kind",
         {"kind", "grid", "check = derivative | trajectory | period", "x0", "q"}},
    };
    return table;
}

std::optional<IdentityInfo> identity_info(const std::string& tag) {
    for (const auto& i : identities())
        if (i.tag == tag) return i;
    return std::nullopt;
}

std::vector<CatalogSection> list_catalog() {
    std::vector<CatalogSection> out;
    out.push_back({"fields", {"Q", "quad(d): squarefree d, |d| <= 30, d != 1", "zeta(n): 1 <= n <= 12", "biquad: Q(sqrt 2, sqrt 3)"}});
    out.push_back({"flows", flows::catalog::flow_ids()});
    out.push_back({"complexes", ends::exhaustion_names()});
    CatalogSection ids{"identities", {}};
    for (const auto& i : identities()) ids.entries.push_back(i.tag);
    out.push_back(ids);
    return out;
}

}  // namespace lefschetz::harness
