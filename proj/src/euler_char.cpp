#include "sphpoly/euler_char.hpp"

#include <stdexcept>

namespace sphpoly {

namespace {

// 2*(-1)^(index+1) * count, the full surgery step for one stratum.
BigInt full_increment(const CriticalStratum& st) {
    BigInt two_count = st.count + st.count;
    return st.index % 2 == 0 ? -two_count : two_count;
}

// (-1)^(index+1) * count, the half step when the level set sits on the value.
BigInt half_increment(const CriticalStratum& st) {
    return st.index % 2 == 0 ? -st.count : st.count;
}

}  // namespace

AnglePosition locate(const Spectrum& spec, const PiFraction& a) {
    if (a.is_zero()) throw std::invalid_argument("locate: angle must lie strictly in (0, pi)");
    if (auto level = spec.level_of(a))
        return AnglePosition{true, *level, a};
    return AnglePosition{false, spec.interval_of(a), a};
}

AnglePosition locate(int n, const PiFraction& a) { return locate(build_spectrum(n), a); }

ChiResult euler_characteristic(const Spectrum& spec, const PiFraction& a) {
    ChiResult result;
    result.position = locate(spec, a);

    const std::size_t count = spec.level_count();
    // levels strictly above a contribute their full surgery step
    const std::size_t above_from = result.position.index + 1;
    for (std::size_t j = count; j >= above_from; --j) {
        for (const auto& st : spec.zeta(j).strata) {
            BigInt inc = full_increment(st);
            result.chi += inc;
            result.contributions.push_back({st, std::move(inc)});
        }
    }
    if (result.position.at_critical) {
        for (const auto& st : spec.zeta(result.position.index).strata) {
            BigInt inc = half_increment(st);
            result.chi += inc;
            result.contributions.push_back({st, std::move(inc)});
        }
    }
    return result;
}

ChiResult euler_characteristic(int n, const PiFraction& a) {
    return euler_characteristic(build_spectrum(n), a);
}

PiFraction sample_in_interval(const Spectrum& spec, std::size_t i) {
    const std::size_t count = spec.level_count();
    if (i > count) throw std::out_of_range("sample_in_interval: interval index out of range");
    if (i == count) {
        const PiFraction& top = spec.zeta(count).value;
        return PiFraction::reduce(top.num() + 1, top.den() + 1);  // mediant with pi
    }
    const PiFraction& hi = spec.zeta(i + 1).value;
    if (i == 0) return PiFraction::reduce(hi.num(), hi.den() + 1);  // mediant with 0
    return mediant(spec.zeta(i).value, hi);
}

BigInt chi_on_interval(const Spectrum& spec, std::size_t i) {
    if (i >= spec.level_count())
        throw std::out_of_range("chi_on_interval: interval index out of range");
    return euler_characteristic(spec, sample_in_interval(spec, i)).chi;
}

BigInt chi_on_interval(int n, std::size_t i) { return chi_on_interval(build_spectrum(n), i); }

std::vector<BigInt> chi_table(const Spectrum& spec) {
    const std::size_t count = spec.level_count();
    std::vector<BigInt> table(count);
    BigInt acc;  // chi above the top level
    for (std::size_t j = count; j >= 1; --j) {
        for (const auto& st : spec.zeta(j).strata) acc += full_increment(st);
        table[j - 1] = acc;
    }
    return table;
}

std::vector<BigInt> chi_table(int n) { return chi_table(build_spectrum(n)); }

BigInt chi_closed_form_low(int n, long long i) {
    int m = require_odd_n(n);
    if (i < 0 || i > lower_edge_count(m))
        throw std::out_of_range("chi_closed_form_low: subscript must be in 0.." +
                                std::to_string(lower_edge_count(m)));
    BigInt central = binomial(2 * m, m);
    if (m % 2 == 0) central = -central;
    if (i == 0) return central;
    BigInt term = (BigInt(2 * i) * binomial(n, i)).div_exact(static_cast<std::uint32_t>(n));
    return i % 2 == 0 ? central + term : central - term;
}

BigInt chi_closed_form_high(int n, long long i) {
    int m = require_odd_n(n);
    if (i < 0 || i > upper_edge_count(m))
        throw std::out_of_range("chi_closed_form_high: subscript must be in 0.." +
                                std::to_string(upper_edge_count(m)));
    BigInt term =
        (BigInt(2 * (i + 1)) * binomial(n, i + 1)).div_exact(static_cast<std::uint32_t>(n));
    return i % 2 == 0 ? term : -term;
}

BigInt chi_half_pi_stratum_sum(int n) {
    int m = require_odd_n(n);
    auto row = binomial_row(n, m - 1);
    BigInt sum;
    for (int s = 1; s <= m; ++s) {
        BigInt term = BigInt(s - s / 2) * row[m - s];
        sum += (m + s) % 2 == 0 ? term : -term;
    }
    return sum + sum;
}

BigInt chi_at_half_pi(int n) {
    int m = require_odd_n(n);
    BigInt closed = BigInt::power_of_two(2 * static_cast<unsigned long>(m) - 1);
    if (m % 2 == 0) closed = -closed;

    BigInt by_descent = euler_characteristic(n, PiFraction::reduce(1, 2)).chi;
    BigInt by_sum = chi_half_pi_stratum_sum(n);
    if (closed != by_descent || closed != by_sum)
        throw std::logic_error("chi_at_half_pi: closed form, descent and stratum sum disagree");
    return closed;
}

RecurrenceReport check_chi_recurrences(int n) {
    int m = require_odd_n(n);
    Spectrum spec = build_spectrum(n);
    auto table = chi_table(spec);
    const long long count = static_cast<long long>(spec.level_count());
    RecurrenceReport report;

    auto table_chi = [&](long long i) {
        // interval count coincides with the region above the top level
        return i < count ? table[static_cast<std::size_t>(i)]
                         : euler_characteristic(spec, sample_in_interval(
                                                          spec, static_cast<std::size_t>(i)))
                               .chi;
    };

    BigInt sigma = binomial(2 * m, m);
    if (m % 2 == 0) sigma = -sigma;
    for (long long i = 0; i <= lower_edge_count(m); ++i) {
        if (sigma != table_chi(i))
            report.mismatches.push_back("sigma mismatch at interval " + std::to_string(i) +
                                        " for n=" + std::to_string(n));
        ++report.checked;
        BigInt step = binomial(n, i) + binomial(n, i);
        sigma += i % 2 == 0 ? -step : step;
    }

    BigInt tau(2);
    for (long long i = 0; i <= upper_edge_count(m); ++i) {
        if (tau != table[static_cast<std::size_t>(count - 1 - i)])
            report.mismatches.push_back("tau mismatch at interval " +
                                        std::to_string(count - 1 - i) +
                                        " for n=" + std::to_string(n));
        ++report.checked;
        BigInt step = binomial(n, i + 1) + binomial(n, i + 1);
        tau += i % 2 == 0 ? -step : step;
    }
    return report;
}

}  // namespace sphpoly
