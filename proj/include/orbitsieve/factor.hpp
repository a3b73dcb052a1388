#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace orbitsieve {

/// Primes up to a fixed limit by plain sieve of Eratosthenes.
class PrimeTable {
  public:
    explicit PrimeTable(std::uint64_t limit);

    const std::vector<std::uint32_t>& primes() const { return primes_; }
    std::uint64_t limit() const { return limit_; }

    /// Primes p with p < z (strict), the convention used by P(z).
    std::vector<std::uint32_t> below(double z) const;

  private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> primes_;
};

/// Trial division; requires table.limit()^2 >= n.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n,
                                                     const PrimeTable& table);

/// Number of prime factors with multiplicity; Omega(1) = 0.
int prime_omega(std::uint64_t n, const PrimeTable& table);

/// Number of distinct prime factors.
int prime_nu(std::uint64_t n, const PrimeTable& table);

int mobius(std::uint64_t n, const PrimeTable& table);

bool is_squarefree(std::uint64_t n, const PrimeTable& table);

bool is_prime(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);

}  // namespace orbitsieve
