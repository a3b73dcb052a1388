#pragma once

#include "orbitsieve/group.hpp"
#include "orbitsieve/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitsieve {

/// One point (c,d) of the orbit (0,1)Gamma, with f(c,d) = c^2 + d^2 cached.
struct OrbitPoint {
    std::int64_t c, d;
    std::uint64_t fvalue;

    OrbitPoint(std::int64_t c_, std::int64_t d_);

    bool operator==(const OrbitPoint& o) const { return c == o.c && d == o.d; }
    bool operator<(const OrbitPoint& o) const {
        return c != o.c ? c < o.c : d < o.d;
    }
};

struct EnumerationStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t audit_nodes = 0;
    bool minus_identity_reached = false;
};

/// The set O(T) = {(c,d) in O : c^2+d^2 < T}, from a pruned BFS over
/// Gamma_inf-cosets.  `exhausted` is the doubled-prune audit verdict: the
/// run at beta and the run at 2*beta produced identical point sets.
struct OrbitSlice {
    Rat height;
    Rat prune_factor;
    bool exhausted = false;
    std::string presentation_name;
    std::vector<OrbitPoint> points;  // sorted by (c,d), duplicates removed
    EnumerationStats stats;
};

struct EnumerateOptions {
    Rat beta = 4;
    std::uint64_t node_cap = 8'000'000;
    int workers = 1;
    bool audit = true;
};

/// Thrown when the BFS frontier exceeds the node cap; carries the partial
/// statistics gathered before the overflow.
class EnumerationOverflow : public std::runtime_error {
  public:
    EnumerationOverflow(const std::string& what, EnumerationStats stats)
        : std::runtime_error(what), partial(stats) {}
    EnumerationStats partial;
};

OrbitSlice enumerate_orbit(const GroupPresentation& pres, const Rat& height,
                           const EnumerateOptions& opts = {});

/// |O(T)|.  Refuses slices whose prune audit did not certify exhaustion.
std::uint64_t count(const OrbitSlice& slice);

/// The smoothed indicator w_T at f-value n: 1 below T/(1+eps), 0 above
/// T/(1-eps), linear ramp in between.  Exact rational.
Rat smoothed_weight(std::uint64_t n, const Rat& T, const Rat& epsilon);

/// a_n(T) tables.  Sharp mode is the eps -> 0 limit: a_n = #{points with
/// fvalue = n < T}.
struct WeightTable {
    Rat height;
    Rat epsilon;  // 0 in sharp mode
    bool sharp = false;
    std::map<std::uint64_t, Rat> entries;

    Rat total() const;
    std::uint64_t max_support() const;  // largest n with a_n > 0 (0 if empty)
};

WeightTable weight_table(const OrbitSlice& slice, const Rat& T, const Rat& epsilon);
WeightTable sharp_weight_table(const OrbitSlice& slice, const Rat& T);

enum class PrimeFactorMode {
    WithMultiplicity,  // Omega(n) <= R, the sieve convention
    Distinct,          // omega(n) <= R, for comparison
};

/// Number of orbit points whose f-value has at most R prime factors.
std::uint64_t almost_prime_count(const OrbitSlice& slice, int R,
                                 PrimeFactorMode mode = PrimeFactorMode::WithMultiplicity,
                                 int workers = 1);

/// Verifies f((0,1) * gamma * alpha^n) is exactly quadratic in n for
/// n = 0..n_max, alpha = (1,h;0,1): all third differences vanish.
bool unipotent_slice_check(const GroupPresentation& pres, const GroupElement& gamma,
                           int n_max);

}  // namespace orbitsieve
