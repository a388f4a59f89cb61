#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "sphpoly/euler_char.hpp"

using namespace sphpoly;

namespace {
BigInt bi(long long v) { return BigInt(v); }
}

TEST_CASE("locate") {
    auto spec = build_spectrum(5);

    auto inside = locate(spec, PiFraction::reduce(1, 2));
    CHECK(!inside.at_critical);
    CHECK(inside.index == 1);

    auto critical = locate(spec, PiFraction::reduce(2, 3));
    CHECK(critical.at_critical);
    CHECK(critical.index == 2);
    CHECK(critical.value == PiFraction::reduce(2, 3));

    auto top = locate(spec, PiFraction::reduce(9, 10));
    CHECK(!top.at_critical);
    CHECK(top.index == 3);

    CHECK_THROWS_AS(locate(spec, PiFraction::zero()), std::invalid_argument);
}

TEST_CASE("euler characteristic at sample angles of n = 5") {
    auto spec = build_spectrum(5);

    auto mid = euler_characteristic(spec, PiFraction::reduce(1, 2));
    CHECK(mid.chi == bi(-8));
    REQUIRE(mid.contributions.size() == 2);
    CHECK(mid.contributions[0].stratum.pair == StratumPair{5, 4});
    CHECK(mid.contributions[0].increment == bi(2));
    CHECK(mid.contributions[1].stratum.pair == StratumPair{3, 2});
    CHECK(mid.contributions[1].increment == bi(-10));

    CHECK(euler_characteristic(spec, PiFraction::reduce(9, 10)).chi == bi(0));
    CHECK(euler_characteristic(spec, PiFraction::reduce(7, 10)).chi == bi(2));

    // landing exactly on a level takes half of each stratum's full step,
    // measured from the interval above
    auto at = euler_characteristic(spec, PiFraction::reduce(2, 3));
    CHECK(at.position.at_critical);
    CHECK(at.chi == bi(-3));  // 2 + (-1)^3 * 5

    // chi always equals the sum of the listed increments
    for (const auto& a : {PiFraction::reduce(1, 2), PiFraction::reduce(2, 3),
                          PiFraction::reduce(1, 5), PiFraction::reduce(4, 5)}) {
        auto result = euler_characteristic(spec, a);
        BigInt sum;
        for (const auto& c : result.contributions) sum += c.increment;
        CHECK(sum == result.chi);
    }
}

TEST_CASE("chi on intervals of n = 5 and n = 3") {
    CHECK(chi_on_interval(5, 2) == bi(2));
    CHECK(chi_on_interval(5, 1) == bi(-8));
    CHECK(chi_on_interval(5, 0) == bi(-6));
    CHECK(chi_table(5) == std::vector<BigInt>{bi(-6), bi(-8), bi(2)});

    CHECK(chi_table(3) == std::vector<BigInt>{bi(2)});

    CHECK_THROWS_AS(chi_on_interval(5, 3), std::out_of_range);
}

TEST_CASE("chi table of n = 7") {
    auto table = chi_table(7);
    REQUIRE(table.size() == 6);
    CHECK(table[0] == bi(20));   // central binomial C(6,3)
    CHECK(table[1] == bi(18));   // one step up
    CHECK(table[2] == bi(32));   // 20 + 4m
    CHECK(table[3] == bi(30));   // n^2 - 3n + 2
    CHECK(table[4] == bi(-12));  // -2n + 2
    CHECK(table[5] == bi(2));    // sphere
}

TEST_CASE("interval chi does not depend on the sample point") {
    for (int n = 3; n <= 41; n += 2) {
        auto spec = build_spectrum(n);
        auto table = chi_table(spec);
        for (std::size_t i = 0; i < spec.level_count(); ++i) {
            PiFraction first = sample_in_interval(spec, i);
            PiFraction second = mediant(first, spec.zeta(i + 1).value);
            PiFraction third = i == 0 ? mediant(PiFraction::zero(), first)
                                      : mediant(spec.zeta(i).value, first);
            CHECK(euler_characteristic(spec, first).chi == table[i]);
            CHECK(euler_characteristic(spec, second).chi == table[i]);
            CHECK(euler_characteristic(spec, third).chi == table[i]);
        }
    }
}

TEST_CASE("value on a level is the average of the neighbouring intervals") {
    for (int n = 3; n <= 41; n += 2) {
        auto spec = build_spectrum(n);
        for (std::size_t j = 1; j <= spec.level_count(); ++j) {
            BigInt above = euler_characteristic(spec, sample_in_interval(spec, j)).chi;
            BigInt below = euler_characteristic(spec, sample_in_interval(spec, j - 1)).chi;
            BigInt at = euler_characteristic(spec, spec.zeta(j).value).chi;
            CHECK((at - above) + (at - above) == below - above);
        }
    }
}

TEST_CASE("closed forms near the bottom of the table") {
    CHECK(chi_closed_form_low(5, 0) == bi(-6));
    CHECK(chi_closed_form_low(5, 1) == bi(-8));
    CHECK(chi_closed_form_low(5, 2) == bi(2));
    CHECK_THROWS_AS(chi_closed_form_low(5, 3), std::out_of_range);
    CHECK_THROWS_AS(chi_closed_form_low(5, -1), std::out_of_range);
}

TEST_CASE("closed forms near the top of the table") {
    CHECK(chi_closed_form_high(7, 0) == bi(2));
    CHECK(chi_closed_form_high(7, 1) == bi(-12));
    CHECK(chi_closed_form_high(7, 2) == bi(30));
    CHECK_THROWS_AS(chi_closed_form_high(7, 3), std::out_of_range);
}

TEST_CASE("closed forms agree with the descent table") {
    for (int n = 3; n <= 61; n += 2) {
        auto spec = build_spectrum(n);
        auto table = chi_table(spec);
        const long long count = static_cast<long long>(spec.level_count());
        auto interval_value = [&](long long i) {
            return i < count ? table[static_cast<std::size_t>(i)]
                             : euler_characteristic(
                                   spec, sample_in_interval(spec, static_cast<std::size_t>(i)))
                                   .chi;
        };
        for (long long i = 0; i <= lower_edge_count(spec.m()); ++i)
            CHECK(chi_closed_form_low(n, i) == interval_value(i));
        for (long long i = 0; i <= upper_edge_count(spec.m()); ++i)
            CHECK(chi_closed_form_high(n, i) == interval_value(count - 1 - i));
    }
}

TEST_CASE("bottom interval carries the signed central binomial") {
    for (int n = 3; n <= 199; n += 2) {
        int m = (n - 1) / 2;
        BigInt expected = binomial(2 * m, m);
        if (m % 2 == 0) expected = -expected;
        CHECK(chi_on_interval(n, 0) == expected);
    }
}

TEST_CASE("top interval is a sphere and above it nothing") {
    for (int n = 3; n <= 99; n += 2) {
        auto spec = build_spectrum(n);
        CHECK(chi_on_interval(spec, spec.level_count() - 1) == bi(2));
        auto empty = euler_characteristic(spec, sample_in_interval(spec, spec.level_count()));
        CHECK(empty.chi == bi(0));
        CHECK(empty.contributions.empty());
    }
}

TEST_CASE("chi at pi/2") {
    CHECK(chi_at_half_pi(5) == bi(-8));
    CHECK(chi_at_half_pi(3) == bi(2));
    CHECK(chi_at_half_pi(7) == bi(32));
    CHECK(chi_half_pi_stratum_sum(5) == bi(-8));
    for (int n = 3; n <= 99; n += 2) {
        int m = (n - 1) / 2;
        BigInt expected = BigInt::power_of_two(2 * static_cast<unsigned long>(m) - 1);
        if (m % 2 == 0) expected = -expected;
        CHECK(chi_at_half_pi(n) == expected);
    }
}

TEST_CASE("edge recurrences replay the descent table") {
    CHECK(check_chi_recurrences(5).ok());
    CHECK(check_chi_recurrences(9).ok());
    auto big = check_chi_recurrences(99);
    CHECK(big.ok());
    CHECK(big.checked > 0);
}
