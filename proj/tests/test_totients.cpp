#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "sphpoly/totients.hpp"

using namespace sphpoly;

namespace {

// gcd-enumeration oracles, written here independently of the library paths
std::uint64_t phi_oracle(std::uint64_t k) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 1; i <= k; ++i)
        if (std::gcd(i, k) == 1) ++c;
    return c;
}

std::uint64_t legendre_oracle(std::uint64_t x, std::uint64_t d) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 1; i <= x; ++i)
        if (std::gcd(i, d) == 1) ++c;
    return c;
}

}  // namespace

TEST_CASE("euler totient examples") {
    CHECK(euler_totient(1) == BigInt(1));
    CHECK(euler_totient(3) == BigInt(2));   // phi_oracle(3)
    CHECK(euler_totient(5) == BigInt(4));   // phi_oracle(5)
    CHECK_THROWS_AS(euler_totient(0), std::invalid_argument);
}

TEST_CASE("totient routes agree with the oracle") {
    for (std::uint64_t k = 1; k <= 1500; ++k) {
        auto expected = phi_oracle(k);
        CHECK(totient_by_gcd_count(k) == expected);
        CHECK(totient_by_factorization(k) == expected);
        CHECK(totient_u64(k) == expected);
    }
}

TEST_CASE("totient sieve agrees with per-value computation") {
    auto phi = totient_sieve(3000);
    REQUIRE(phi.size() == 3001);
    CHECK(phi[0] == 0);
    for (std::uint64_t k = 1; k <= 3000; ++k) CHECK(phi[k] == totient_by_factorization(k));
}

TEST_CASE("legendre totient examples") {
    CHECK(legendre_totient(1, 6) == BigInt(1));
    CHECK(legendre_totient(0, 7) == BigInt(0));
    CHECK(legendre_totient(1, 10) == BigInt(1));
    CHECK_THROWS_AS(legendre_totient(3, 0), std::invalid_argument);
}

TEST_CASE("legendre routes agree with the oracle") {
    for (std::uint64_t d = 1; d <= 120; ++d)
        for (std::uint64_t x = 0; x <= 130; ++x) {
            auto expected = legendre_oracle(x, d);
            CHECK(legendre_by_gcd_count(x, d) == expected);
            CHECK(legendre_by_inclusion_exclusion(x, d) == expected);
            CHECK(legendre_u64(x, d) == expected);
        }
}

TEST_CASE("legendre totient at the diagonal is the euler totient") {
    for (std::uint64_t k = 1; k <= 1000; ++k) CHECK(legendre_totient(k, k) == euler_totient(k));
}

TEST_CASE("odd totient sum") {
    CHECK(odd_totient_sum(1) == BigInt(1));
    CHECK(odd_totient_sum(5) == BigInt(7));   // 1 + 2 + 4
    CHECK(odd_totient_sum(9) == BigInt(19));  // 1 + 2 + 4 + 6 + 6
    CHECK_THROWS_AS(odd_totient_sum(4), std::invalid_argument);
    CHECK_THROWS_AS(odd_totient_sum(0), std::invalid_argument);

    std::uint64_t running = 0;
    for (std::uint64_t n = 1; n <= 999; n += 2) {
        running += phi_oracle(n);
        CHECK(odd_totient_sum_u64(n) == running);
    }
    // force the sieve path and compare with the direct path
    CHECK(odd_totient_sum_u64(4095) == [] {
        std::uint64_t sum = 0;
        for (std::uint64_t i = 1; i <= 4095; i += 2) sum += totient_by_factorization(i);
        return sum;
    }());
}
