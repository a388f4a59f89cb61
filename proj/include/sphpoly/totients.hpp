#pragma once

#include <cstdint>
#include <vector>

#include "sphpoly/bigint.hpp"

namespace sphpoly {

// Euler's totient, two independent routes.  The gcd count is the slow oracle,
// the factorization route is the production path; euler_totient dispatches on
// size and the test suite pins the two routes against each other.
std::uint64_t totient_by_gcd_count(std::uint64_t k);
std::uint64_t totient_by_factorization(std::uint64_t k);
std::uint64_t totient_u64(std::uint64_t k);
BigInt euler_totient(std::uint64_t k);

// phi(0..limit) by a linear sieve; phi[0] = 0.
std::vector<std::uint32_t> totient_sieve(std::uint32_t limit);

// Legendre totient: |{1 <= i <= x : gcd(i, d) = 1}|.  Same oracle/fast split,
// the fast route doing inclusion-exclusion over the distinct primes of d.
std::uint64_t legendre_by_gcd_count(std::uint64_t x, std::uint64_t d);
std::uint64_t legendre_by_inclusion_exclusion(std::uint64_t x, std::uint64_t d);
std::uint64_t legendre_u64(std::uint64_t x, std::uint64_t d);
BigInt legendre_totient(std::uint64_t x, std::uint64_t d);

// Sum of phi over odd arguments up to n; rejects even n.
std::uint64_t odd_totient_sum_u64(std::uint64_t n);
BigInt odd_totient_sum(std::uint64_t n);

}  // namespace sphpoly
