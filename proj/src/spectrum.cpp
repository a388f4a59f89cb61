#include "sphpoly/spectrum.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "sphpoly/totients.hpp"

namespace sphpoly {

int require_odd_n(long long n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("n must be an odd integer >= 3, got " + std::to_string(n));
    if (n > std::numeric_limits<int>::max())
        throw std::invalid_argument("n too large");
    return static_cast<int>((n - 1) / 2);
}

Spectrum::Spectrum(int n, std::vector<Level> levels) : n_(n), levels_(std::move(levels)) {
    require_odd_n(n);
}

const Level& Spectrum::zeta(std::size_t i) const {
    if (i < 1 || i > levels_.size())
        throw std::out_of_range("Spectrum: level subscript out of range");
    return levels_[i - 1];
}

std::optional<std::size_t> Spectrum::level_of(const PiFraction& a) const {
    auto it = std::lower_bound(levels_.begin(), levels_.end(), a,
                               [](const Level& lv, const PiFraction& x) { return lv.value < x; });
    if (it != levels_.end() && it->value == a)
        return static_cast<std::size_t>(it - levels_.begin()) + 1;
    return std::nullopt;
}

std::size_t Spectrum::interval_of(const PiFraction& a) const {
    if (a.is_zero()) throw std::invalid_argument("interval_of: angle must be positive");
    auto it = std::lower_bound(levels_.begin(), levels_.end(), a,
                               [](const Level& lv, const PiFraction& x) { return lv.value < x; });
    if (it != levels_.end() && it->value == a)
        throw std::invalid_argument("interval_of: angle is a critical value");
    return static_cast<std::size_t>(it - levels_.begin());
}

BigInt Spectrum::total_count() const {
    BigInt total;
    for (const auto& level : levels_)
        for (const auto& st : level.strata) total += st.count;
    return total;
}

std::vector<StratumPair> stratum_pairs(int n) {
    require_odd_n(n);
    std::vector<StratumPair> pairs;
    for (int alpha = 3; alpha <= n; alpha += 2)
        for (int beta = 2; beta < alpha; beta += 2) pairs.push_back({alpha, beta});
    return pairs;
}

bool is_stratum_pair(int n, const StratumPair& pair) {
    return pair.alpha % 2 == 1 && pair.beta % 2 == 0 && pair.beta >= 2 &&
           pair.beta < pair.alpha && pair.alpha <= n;
}

CriticalStratum stratum(int n, const StratumPair& pair) {
    int m = require_odd_n(n);
    if (!is_stratum_pair(n, pair))
        throw std::invalid_argument("stratum: (" + std::to_string(pair.alpha) + "," +
                                    std::to_string(pair.beta) +
                                    ") needs alpha odd, beta even, 0 < beta < alpha <= n");
    int s = pair.s();
    int t = pair.t();
    return CriticalStratum{pair, PiFraction::reduce(pair.beta, pair.alpha),
                           binomial(n, m - s), m - s + 2 * t - 1};
}

Spectrum build_spectrum(int n) {
    int m = require_odd_n(n);
    auto row = binomial_row(n, m - 1);  // C(n, m-s) for s = 1..m

    struct Entry {
        PiFraction value;
        StratumPair pair;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(m) * (m + 1) / 2);
    for (int alpha = 3; alpha <= n; alpha += 2)
        for (int beta = 2; beta < alpha; beta += 2)
            entries.push_back({PiFraction::reduce(beta, alpha), {alpha, beta}});

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.pair < b.pair;
    });

    std::vector<Level> levels;
    for (const auto& e : entries) {
        if (levels.empty() || levels.back().value != e.value)
            levels.push_back(Level{e.value, {}});
        int s = e.pair.s();
        int t = e.pair.t();
        levels.back().strata.push_back(
            CriticalStratum{e.pair, e.value, row[m - s], m - s + 2 * t - 1});
    }
    return Spectrum(n, std::move(levels));
}

std::uint64_t critical_value_count_u64(int n) {
    int m = require_odd_n(n);
    std::uint64_t sum = 0;
    if (n < 2048) {
        for (int s = 1; s <= m; ++s) sum += totient_by_factorization(2 * s + 1);
    } else {
        auto phi = totient_sieve(static_cast<std::uint32_t>(n));
        for (int s = 1; s <= m; ++s) sum += phi[2 * s + 1];
    }
    return sum / 2;
}

BigInt critical_value_count(int n) {
    return BigInt(static_cast<long long>(critical_value_count_u64(n)));
}

BigInt critical_point_count(int n) {
    int m = require_odd_n(n);
    // (2m+1)!/(m!)^2 = (m+1) * C(2m+1, m)
    BigInt factorial_ratio = binomial(n, m) * BigInt(m + 1);
    return (factorial_ratio - BigInt::power_of_two(2 * static_cast<unsigned long>(m)))
        .div_exact(2);
}

BigInt critical_point_count_by_strata(int n) {
    int m = require_odd_n(n);
    auto row = binomial_row(n, m - 1);
    BigInt total;
    for (int s = 1; s <= m; ++s) total += BigInt(s) * row[m - s];
    return total;
}

std::uint64_t count_above_half_pi_u64(int n) {
    int m = require_odd_n(n);
    std::uint64_t sum = 0;
    for (long long s = 1; s <= m; ++s)
        sum += legendre_u64(2 * ((s + 1) / 2) - 1, 4 * s + 2);
    return sum;
}

BigInt count_above_half_pi(int n) {
    return BigInt(static_cast<long long>(count_above_half_pi_u64(n)));
}

std::vector<PiFraction> above_half_pi_values(int n) {
    int m = require_odd_n(n);
    std::set<PiFraction> values;
    for (int s = 1; s <= m; ++s)
        for (int t = s / 2 + 1; t <= s; ++t)
            values.insert(PiFraction::reduce(2 * t, 2 * s + 1));
    return {values.begin(), values.end()};
}

HalfPiPosition half_pi_position(int n) {
    int m = require_odd_n(n);
    HalfPiPosition pos;
    pos.k = static_cast<long long>(critical_value_count_u64(n)) -
            static_cast<long long>(count_above_half_pi_u64(n));
    if (m % 2 == 1) {
        pos.below = PiFraction::reduce(m - 1, 2 * m - 1);
        pos.above = PiFraction::reduce(m + 1, 2 * m + 1);
    } else {
        pos.below = PiFraction::reduce(m, 2 * m + 1);
        pos.above = PiFraction::reduce(m, 2 * m - 1);
    }
    return pos;
}

EdgeLevel edge_level(int n, SpectrumEdge which, long long i) {
    long long m = require_odd_n(n);
    if (which == SpectrumEdge::Low) {
        if (i < 1 || i > lower_edge_count(m))
            throw std::out_of_range("edge_level: low subscript must be in 1.." +
                                    std::to_string(lower_edge_count(m)));
        long long alpha = 2 * m - 2 * i + 3;
        return EdgeLevel{PiFraction::reduce(2, alpha),
                         {static_cast<int>(alpha), 2}};
    }
    long long count = static_cast<long long>(critical_value_count_u64(n));
    if (i < count - upper_edge_count(m) || i > count)
        throw std::out_of_range("edge_level: high subscript must be in " +
                                std::to_string(count - upper_edge_count(m)) + ".." +
                                std::to_string(count));
    long long beta = 2 * m - 2 * count + 2 * i;
    return EdgeLevel{PiFraction::reduce(beta, beta + 1),
                     {static_cast<int>(beta + 1), static_cast<int>(beta)}};
}

}  // namespace sphpoly
