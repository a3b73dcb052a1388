#pragma once

#include "orbitsieve/congruence.hpp"
#include "orbitsieve/orbit.hpp"
#include "orbitsieve/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitsieve {

/// The sieve sequence A = {a_n}: a weight table plus its exact total mass X.
struct SieveSequence {
    WeightTable weights;
    Rat X;
    Rat T;

    static SieveSequence from(WeightTable table);
};

/// |A_q| = sum of a_n over n = 0 mod q.  Rejects non-square-free q.
Rat progression_sum(const SieveSequence& seq, std::uint64_t q);

/// r(q) = |A_q| - omega(q) X.  Requires q square-free and coprime to the
/// ramified product, so the lower-order term X_{q'} vanishes.
Rat remainder_term(const SieveSequence& seq, std::uint64_t q,
                   const DensityRecord& dens, std::uint64_t ramified_product);

/// S(z) two ways: directly as sum over n coprime to P(z), and through the
/// Mobius identity sum_{q | P(z)} mu(q) |A_q|.  Both exact rationals; their
/// equality is the cornerstone the sieve report checks.
struct LegendreSums {
    Rat direct;
    Rat mobius;
};

LegendreSums legendre_sum(const SieveSequence& seq, double z);

/// The beta-sieve bounds of the two-sided linear sieve theorem:
///   f(s) = 2 e^gamma log(s-1)/s   on [2,4]
///   F(s) = 2 e^gamma / s          on [1,3]
///   D    = c K^11 (logloglog Q)^3 / loglog Q,  (c/e)^c = e.
struct SieveBounds {
    double s;
    std::optional<double> f_lower;
    std::optional<double> F_upper;
    double D;
    double gamma_euler;
    double c_const;
    double K;
};

SieveBounds beta_bounds(double s, double Q, double K);

/// Q = T^{(delta-theta) / (2(1+eps))}.
double sieve_level(double T, double delta, double theta, double eps);

/// Least integer R with R > 4/(delta-theta), strictly.
int admissible_R(double delta, double theta);

struct SieveConfig {
    Rat T;
    Rat epsilon = Rat(1, 10);
    bool sharp_weights = true;
    double delta_hat = 0.0;
    std::string theta_name = "kim_sarnak";
    double theta = 39.0 / 64.0;
    double sieve_eps = 0.01;  // the eps of Q = T^{(d-t)/(2(1+eps))}, s = 2(1+eps)
    std::optional<double> q_override;
    std::optional<double> z_override;
    std::vector<int> r_list = {1, 2};
    std::uint32_t prime_bound = 50;  // ramified scan limit
    std::uint64_t element_cap = kDefaultElementCap;
    PrimeFactorMode factor_mode = PrimeFactorMode::WithMultiplicity;
    int workers = 1;
};

struct AlmostPrimeRow {
    int R;
    std::uint64_t count;
    double ratio;  // count * log T / T^delta_hat
};

struct SieveReport {
    Rat T;
    std::string presentation_name;
    std::vector<std::uint32_t> ramified;
    double Q_theory = 0.0;
    double Q_used = 0.0;
    double z = 0.0;
    Rat X;
    Rat S_direct;
    Rat S_mobius;
    bool legendre_exact = false;
    Rat V_z;
    double k_hat = 0.0;
    Rat remainder_sum;                  // sum |r(q)|, sf q <= Q_used, (q,B)=1
    std::vector<std::uint64_t> remainder_moduli;
    std::vector<AlmostPrimeRow> almost_prime_counts;
    std::optional<SieveBounds> bounds;  // at s = 2(1+eps), when in domain
    std::string bounds_note;
};

SieveReport run_sieve(const OrbitSlice& slice, const GroupPresentation& pres,
                      const SieveConfig& cfg);

}  // namespace orbitsieve
