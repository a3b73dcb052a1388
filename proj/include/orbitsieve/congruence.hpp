#pragma once

#include "orbitsieve/group.hpp"
#include "orbitsieve/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace orbitsieve {

/// Element of SL2(Z/qZ), residues in [0,q).
struct ResidueMatrix {
    std::uint32_t a, b, c, d;
    std::uint32_t q;

    ResidueMatrix(std::uint32_t a_, std::uint32_t b_, std::uint32_t c_,
                  std::uint32_t d_, std::uint32_t q_);

    static ResidueMatrix reduce(const GroupElement& g, std::uint32_t q);

    std::uint64_t key() const;  // packed 4x16 bits
    static ResidueMatrix from_key(std::uint64_t k, std::uint32_t q);
};

/// |SL2(Z/qZ)| = q^3 prod_{p|q} (1 - p^-2).
std::uint64_t sl2_order(std::uint64_t q);

/// The image G_q of Gamma in SL2(Z/qZ), with the (0,1)-row orbit and the
/// count of unipotent images (the data behind [Gamma : Gamma_1(q)]).
struct ProjectionGroup {
    std::uint32_t q;
    std::vector<std::uint64_t> elements;  // sorted packed keys
    std::vector<std::pair<std::uint32_t, std::uint32_t>> row_orbit;  // sorted
    std::uint64_t unipotent_count = 0;

    std::uint64_t order() const { return elements.size(); }
    bool contains(const ResidueMatrix& m) const;
};

constexpr std::uint64_t kDefaultElementCap = 10'000'000;

ProjectionGroup project(const GroupPresentation& pres, std::uint32_t q,
                        std::uint64_t element_cap = kDefaultElementCap);

/// True iff |G_q| = q(q^2-1).  Rejects composite q (Goursat covers those).
bool is_onto(const ProjectionGroup& pg);

/// All primes p <= p_max where the projection is not onto: the empirical
/// ramified set standing in for the paper's finite bad set.
std::vector<std::uint32_t> ramified_set(const GroupPresentation& pres,
                                        std::uint32_t p_max,
                                        std::uint64_t element_cap = kDefaultElementCap,
                                        int workers = 1);

/// omega(q) = |O_q| / [Gamma : Gamma_1(q)], all exact.
struct DensityRecord {
    std::uint32_t q;
    std::uint64_t o_q;    // #{(c,d) in row orbit : c^2+d^2 = 0 mod q}
    std::uint64_t index;  // |G_q| / unipotent_count
    Rat omega;
};

DensityRecord density(const ProjectionGroup& pg);

/// Convenience: q = 1 yields the empty-condition record omega(1) = 1.
DensityRecord density_of(const GroupPresentation& pres, std::uint32_t q,
                         std::uint64_t element_cap = kDefaultElementCap);

/// Verifies |G_{q1 q2}| = |G_{q1}| |G_{q2}| and omega(q1 q2) = omega(q1)omega(q2)
/// exactly, for coprime square-free moduli.
bool check_goursat(const GroupPresentation& pres, std::uint32_t q1, std::uint32_t q2,
                   std::uint64_t element_cap = kDefaultElementCap);

/// Local density at an unramified prime for f = c^2 + d^2 over the full
/// SL2(Z/pZ) row space: 1/3 at p=2, 2/(p+1) at p=1 mod 4, 0 at p=3 mod 4.
Rat closed_form_omega(std::uint32_t p);

struct DensityProduct {
    Rat value;           // V(z) = prod_{p < z, p not ramified} (1 - omega(p))
    double value_float;
    double k_hat;        // least K making the (S3)-style bound hold on [v, z)
    std::vector<std::pair<std::uint32_t, double>> k_required;  // per cutoff v
};

DensityProduct local_density_product(const GroupPresentation& pres, double z,
                                     const std::vector<std::uint32_t>& ramified,
                                     std::uint64_t element_cap = kDefaultElementCap);

}  // namespace orbitsieve
