#include "sphpoly/totients.hpp"

#include <numeric>
#include <stdexcept>

namespace sphpoly {

namespace {
constexpr std::uint64_t kTotientGcdCutoff = 128;
constexpr std::uint64_t kLegendreGcdCutoff = 64;
constexpr std::uint64_t kOddSumSieveCutoff = 2048;

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t d) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= d; p += (p == 2 ? 1 : 2)) {
        if (d % p == 0) {
            primes.push_back(p);
            while (d % p == 0) d /= p;
        }
    }
    if (d > 1) primes.push_back(d);
    return primes;
}
}  // namespace

std::uint64_t totient_by_gcd_count(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("totient: argument must be positive");
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= k; ++i)
        if (std::gcd(i, k) == 1) ++count;
    return count;
}

std::uint64_t totient_by_factorization(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("totient: argument must be positive");
    std::uint64_t result = k;
    std::uint64_t rest = k;
    for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p == 0) {
            result -= result / p;
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1) result -= result / rest;
    return result;
}

std::uint64_t totient_u64(std::uint64_t k) {
    return k < kTotientGcdCutoff ? totient_by_gcd_count(k) : totient_by_factorization(k);
}

BigInt euler_totient(std::uint64_t k) {
    return BigInt(static_cast<long long>(totient_u64(k)));
}

std::vector<std::uint32_t> totient_sieve(std::uint32_t limit) {
    std::vector<std::uint32_t> phi(static_cast<std::size_t>(limit) + 1, 0);
    if (limit == 0) return phi;
    phi[1] = 1;
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            phi[i] = i - 1;
        }
        for (std::uint32_t p : primes) {
            std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
            if (ip > limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                phi[ip] = phi[i] * p;
                break;
            }
            phi[ip] = phi[i] * (p - 1);
        }
    }
    return phi;
}

std::uint64_t legendre_by_gcd_count(std::uint64_t x, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("legendre totient: modulus must be positive");
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= x; ++i)
        if (std::gcd(i, d) == 1) ++count;
    return count;
}

std::uint64_t legendre_by_inclusion_exclusion(std::uint64_t x, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("legendre totient: modulus must be positive");
    if (x == 0) return 0;
    auto primes = distinct_prime_factors(d);
    std::uint64_t total = 0;
    const std::uint32_t subsets = 1u << primes.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t prod = 1;
        bool odd_subset = false;
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (mask & (1u << j)) {
                prod *= primes[j];
                odd_subset = !odd_subset;
            }
        }
        if (odd_subset)
            total -= x / prod;
        else
            total += x / prod;
    }
    return total;
}

std::uint64_t legendre_u64(std::uint64_t x, std::uint64_t d) {
    return x < kLegendreGcdCutoff ? legendre_by_gcd_count(x, d)
                                  : legendre_by_inclusion_exclusion(x, d);
}

BigInt legendre_totient(std::uint64_t x, std::uint64_t d) {
    return BigInt(static_cast<long long>(legendre_u64(x, d)));
}

std::uint64_t odd_totient_sum_u64(std::uint64_t n) {
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("odd totient sum: n must be odd and positive");
    std::uint64_t sum = 0;
    if (n < kOddSumSieveCutoff) {
        for (std::uint64_t i = 1; i <= n; i += 2) sum += totient_by_factorization(i);
    } else {
        auto phi = totient_sieve(static_cast<std::uint32_t>(n));
        for (std::uint64_t i = 1; i <= n; i += 2) sum += phi[i];
    }
    return sum;
}

BigInt odd_totient_sum(std::uint64_t n) {
    return BigInt(static_cast<long long>(odd_totient_sum_u64(n)));
}

}  // namespace sphpoly
