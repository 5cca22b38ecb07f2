#pragma once

#include "edslrs/bigint.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace edslrs::nt {

bool is_prime(const Int& n);
bool is_prime_u64(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);
/// All primes <= limit (Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

struct Factorization {
    std::map<Int, unsigned> primes;
    /// Unfactored composite left over when the iteration budget ran out (1 when complete).
    Int cofactor{1};
    bool complete() const { return cofactor == 1; }
    Int value() const;
};

/// Trial division followed by Pollard-Brent rho. |n| is factored; the sign is dropped.
/// rho_budget bounds the total number of rho iterations.
Factorization factor(const Int& n, std::uint64_t rho_budget = 4'000'000);

/// Complete factorization of a 64-bit value.
std::map<std::uint64_t, unsigned> factor_u64(std::uint64_t n);

/// Distinct prime divisors of a fully factored value.
std::vector<Int> prime_divisors(const Int& n);

}  // namespace edslrs::nt
