#include "sphpoly/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "sphpoly/bigint.hpp"
#include "sphpoly/euler_char.hpp"
#include "sphpoly/oracle.hpp"
#include "sphpoly/pi_fraction.hpp"
#include "sphpoly/spectrum.hpp"
#include "sphpoly/totients.hpp"

namespace sphpoly {

namespace {

// Runs one named check; exceptions count as failures, not crashes.
void run_check(VerifyReport& report, const std::string& name,
               const std::function<std::string()>& body) {
    Check check{name, false, ""};
    try {
        check.detail = body();  // empty or a short summary on success
        check.passed = true;
    } catch (const std::exception& e) {
        check.detail = e.what();
    }
    report.checks.push_back(std::move(check));
}

// Throwing assert for check bodies.
void expect(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

std::string at_n(int n) { return " at n=" + std::to_string(n); }

void arith_checks(VerifyReport& report) {
    run_check(report, "arith.reduce_idempotent", [] {
        for (long long q = 1; q <= 60; ++q)
            for (long long p = 0; p < q; ++p) {
                auto f = PiFraction::reduce(p, q);
                expect(PiFraction::reduce(f.num(), f.den()) == f,
                       "reduce not idempotent at " + std::to_string(p) + "/" + std::to_string(q));
            }
        return "all p/q with q <= 60";
    });

    run_check(report, "arith.pascal_recurrence", [] {
        for (long long n = 1; n <= 40; ++n)
            for (long long k = 1; k < n; ++k)
                expect(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k),
                       "Pascal step fails at C(" + std::to_string(n) + "," + std::to_string(k) +
                           ")");
        return "n <= 40";
    });

    run_check(report, "arith.binomial_split_identity", [] {
        for (long long m = 1; m <= 30; ++m)
            for (long long s = 1; s <= m; ++s)
                expect(binomial(2 * m, m + s + 1) + binomial(2 * m, m - s) ==
                           binomial(2 * m + 1, m - s),
                       "split identity fails at m=" + std::to_string(m) +
                           ", s=" + std::to_string(s));
        return "m <= 30";
    });

    run_check(report, "arith.weighted_binomial_sum_closed_form", [] {
        for (long long m = 1; m <= 30; ++m) {
            BigInt sum;
            for (long long s = 1; s <= m; ++s) sum += BigInt(s) * binomial(2 * m + 1, m - s);
            BigInt closed = (binomial(2 * m + 1, m) * BigInt(m + 1) -
                             BigInt::power_of_two(2 * static_cast<unsigned long>(m)))
                                .div_exact(2);
            expect(sum == closed, "weighted sum mismatch at m=" + std::to_string(m));
        }
        return "m <= 30";
    });

    run_check(report, "arith.totient_paths_agree", [] {
        auto sieve = totient_sieve(2000);
        for (std::uint64_t k = 1; k <= 2000; ++k) {
            auto by_gcd = totient_by_gcd_count(k);
            expect(by_gcd == totient_by_factorization(k),
                   "gcd/factorization disagree at k=" + std::to_string(k));
            expect(by_gcd == sieve[k], "sieve disagrees at k=" + std::to_string(k));
        }
        return "k <= 2000, three routes";
    });

    run_check(report, "arith.legendre_paths_agree", [] {
        for (std::uint64_t d = 1; d <= 150; ++d)
            for (std::uint64_t x = 0; x <= 150; ++x)
                expect(legendre_by_gcd_count(x, d) == legendre_by_inclusion_exclusion(x, d),
                       "legendre routes disagree at x=" + std::to_string(x) +
                           ", d=" + std::to_string(d));
        return "x, d <= 150";
    });

    run_check(report, "arith.legendre_totient_at_diagonal", [] {
        for (std::uint64_t k = 1; k <= 1000; ++k)
            expect(legendre_totient(k, k) == euler_totient(k),
                   "diagonal mismatch at k=" + std::to_string(k));
        return "k <= 1000";
    });
}

void spectrum_checks(VerifyReport& report, int n_max) {
    run_check(report, "spectrum.level_count_equals_totient_half_sum", [n_max] {
        for (int n = 3; n <= n_max; n += 2)
            expect(build_spectrum(n).level_count() == critical_value_count_u64(n),
                   "level count mismatch" + at_n(n));
        return "odd n <= " + std::to_string(n_max);
    });

    run_check(report, "spectrum.stratum_total_matches_closed_form", [n_max] {
        for (int n = 3; n <= n_max; n += 2) {
            BigInt total = build_spectrum(n).total_count();
            expect(total == critical_point_count(n), "closed form mismatch" + at_n(n));
            expect(total == critical_point_count_by_strata(n), "stratum sum mismatch" + at_n(n));
        }
        return "both routes, odd n <= " + std::to_string(n_max);
    });

    run_check(report, "spectrum.pairs_partition_levels", [n_max] {
        for (int n = 3; n <= n_max; n += 2) {
            auto spec = build_spectrum(n);
            std::set<StratumPair> seen;
            for (const auto& level : spec.levels())
                for (const auto& st : level.strata)
                    expect(seen.insert(st.pair).second, "duplicate pair" + at_n(n));
            expect(seen.size() == stratum_pairs(n).size(), "pair count mismatch" + at_n(n));
        }
        return "odd n <= " + std::to_string(n_max);
    });

    run_check(report, "spectrum.index_parity_independent_of_beta", [n_max] {
        for (int n = 3; n <= n_max; n += 2) {
            auto spec = build_spectrum(n);
            for (const auto& level : spec.levels())
                for (const auto& st : level.strata)
                    expect((st.index - (spec.m() - st.pair.s() - 1)) % 2 == 0,
                           "index parity mismatch" + at_n(n));
        }
        return "odd n <= " + std::to_string(n_max);
    });

    run_check(report, "spectrum.values_above_half_pi", [n_max] {
        const PiFraction half = PiFraction::reduce(1, 2);
        for (int n = 3; n <= n_max; n += 2) {
            auto spec = build_spectrum(n);
            std::vector<PiFraction> filtered;
            for (const auto& level : spec.levels())
                if (level.value > half) filtered.push_back(level.value);
            expect(filtered == above_half_pi_values(n), "set mismatch" + at_n(n));
            expect(filtered.size() == count_above_half_pi_u64(n), "count mismatch" + at_n(n));
        }
        return "odd n <= " + std::to_string(n_max);
    });

    run_check(report, "spectrum.edge_levels_match", [n_max] {
        for (int n = 3; n <= n_max; n += 2) {
            auto spec = build_spectrum(n);
            const long long count = static_cast<long long>(spec.level_count());
            for (long long i = 1; i <= lower_edge_count(spec.m()); ++i) {
                auto edge = edge_level(n, SpectrumEdge::Low, i);
                const Level& level = spec.zeta(static_cast<std::size_t>(i));
                expect(level.value == edge.value, "low edge value mismatch" + at_n(n));
                expect(level.strata.size() == 1 && level.strata[0].pair == edge.pair,
                       "low edge pair mismatch" + at_n(n));
            }
            for (long long i = count - upper_edge_count(spec.m()); i <= count; ++i) {
                auto edge = edge_level(n, SpectrumEdge::High, i);
                const Level& level = spec.zeta(static_cast<std::size_t>(i));
                expect(level.value == edge.value, "high edge value mismatch" + at_n(n));
                expect(level.strata.size() == 1 && level.strata[0].pair == edge.pair,
                       "high edge pair mismatch" + at_n(n));
            }
        }
        return "odd n <= " + std::to_string(n_max);
    });

    run_check(report, "spectrum.half_pi_interval", [n_max] {
        const PiFraction half = PiFraction::reduce(1, 2);
        for (int n = 3; n <= n_max; n += 2) {
            auto spec = build_spectrum(n);
            auto pos = half_pi_position(n);
            expect(pos.below < half && half < pos.above, "pi/2 not bracketed" + at_n(n));

            std::size_t below_count = spec.interval_of(half);
            expect(static_cast<long long>(below_count) == pos.k,
                   "k differs from spectrum position" + at_n(n));
            if (pos.k == 0)
                expect(pos.below.is_zero(), "expected zero sentinel" + at_n(n));
            else
                expect(spec.zeta(static_cast<std::size_t>(pos.k)).value == pos.below,
                       "lower endpoint mismatch" + at_n(n));
            expect(spec.zeta(static_cast<std::size_t>(pos.k) + 1).value == pos.above,
                   "upper endpoint mismatch" + at_n(n));

            // max of the complement vs min of the above-half set
            auto above = above_half_pi_values(n);
            expect(!above.empty() && above.front() == pos.above,
                   "min of above-half set mismatch" + at_n(n));
            PiFraction max_complement;  // zero when the complement is empty
            for (const auto& level : spec.levels())
                if (level.value < half && max_complement < level.value)
                    max_complement = level.value;
            expect(max_complement == pos.below, "max of complement mismatch" + at_n(n));
        }
        return "odd n <= " + std::to_string(n_max);
    });
}

void euler_checks(VerifyReport& report, int n_max) {
    run_check(report, "euler.top_region_chi_zero", [n_max] {
        for (int n = 3; n <= n_max; n += 2) {
            auto spec = build_spectrum(n);
            auto result = euler_characteristic(spec, sample_in_interval(spec, spec.level_count()));
            expect(result.chi.is_zero() && result.contributions.empty(),
                   "nonzero chi above the top level" + at_n(n));
        }
        return "odd n <= " + std::to_string(n_max);
    });

    run_check(report, "euler.sphere_seed_top_interval", [n_max] {
        for (int n = 3; n <= n_max; n += 2) {
            auto spec = build_spectrum(n);
            const Level& top = spec.zeta(spec.level_count());
            expect(top.strata.size() == 1, "top level not a single stratum" + at_n(n));
            expect(top.strata[0].pair == StratumPair{n, n - 1} && top.strata[0].index == n - 2 &&
                       top.strata[0].count == BigInt(1),
                   "top stratum differs from (n, n-1)" + at_n(n));
            expect(chi_on_interval(spec, spec.level_count() - 1) == BigInt(2),
                   "top interval chi != 2" + at_n(n));
        }
        return "odd n <= " + std::to_string(n_max);
    });

    run_check(report, "euler.interval_constancy", [n_max] {
        for (int n = 3; n <= std::min(n_max, 99); n += 2) {
            auto spec = build_spectrum(n);
            auto table = chi_table(spec);
            for (std::size_t i = 0; i < spec.level_count(); ++i) {
                PiFraction first = sample_in_interval(spec, i);
                PiFraction second = mediant(first, spec.zeta(i + 1).value);
                expect(euler_characteristic(spec, first).chi == table[i],
                       "sample one differs from table" + at_n(n));
                expect(euler_characteristic(spec, second).chi == table[i],
                       "sample two differs from table" + at_n(n));
            }
        }
        return "two samples per interval, odd n <= " + std::to_string(std::min(n_max, 99));
    });

    run_check(report, "euler.at_critical_half_relation", [n_max] {
        for (int n = 3; n <= std::min(n_max, 99); n += 2) {
            auto spec = build_spectrum(n);
            for (std::size_t j = 1; j <= spec.level_count(); ++j) {
                BigInt above = euler_characteristic(spec, sample_in_interval(spec, j)).chi;
                BigInt below = euler_characteristic(spec, sample_in_interval(spec, j - 1)).chi;
                BigInt at = euler_characteristic(spec, spec.zeta(j).value).chi;
                BigInt lhs = (at - above) + (at - above);
                expect(lhs == below - above, "half relation fails" + at_n(n));
            }
        }
        return "every level, odd n <= " + std::to_string(std::min(n_max, 99));
    });

    run_check(report, "euler.closed_forms_match_descent", [n_max] {
        for (int n = 3; n <= n_max; n += 2) {
            auto spec = build_spectrum(n);
            auto table = chi_table(spec);
            const long long count = static_cast<long long>(spec.level_count());
            const int m = spec.m();
            auto interval_value = [&](long long i) {
                return i < count
                           ? table[static_cast<std::size_t>(i)]
                           : euler_characteristic(
                                 spec, sample_in_interval(spec, static_cast<std::size_t>(i)))
                                 .chi;
            };
            for (long long i = 0; i <= lower_edge_count(m); ++i)
                expect(chi_closed_form_low(n, i) == interval_value(i),
                       "low closed form differs at i=" + std::to_string(i) + at_n(n));
            for (long long i = 0; i <= upper_edge_count(m); ++i)
                expect(chi_closed_form_high(n, i) == interval_value(count - 1 - i),
                       "high closed form differs at i=" + std::to_string(i) + at_n(n));
            // overlap: both forms covering one subscript must agree
            for (long long i = 0; i <= lower_edge_count(m); ++i) {
                long long from_top = count - 1 - i;
                if (from_top >= 0 && from_top <= upper_edge_count(m))
                    expect(chi_closed_form_low(n, i) == chi_closed_form_high(n, from_top),
                           "closed forms disagree on overlap" + at_n(n));
            }
        }
        return "odd n <= " + std::to_string(n_max);
    });

    run_check(report, "euler.bottom_interval_central_binomial", [n_max] {
        for (int n = 3; n <= n_max; n += 2) {
            BigInt expected = binomial(n - 1, (n - 1) / 2);
            if ((n - 1) / 2 % 2 == 0) expected = -expected;
            expect(chi_on_interval(n, 0) == expected, "bottom interval mismatch" + at_n(n));
        }
        return "odd n <= " + std::to_string(n_max);
    });

    run_check(report, "euler.recurrences_sigma_tau", [n_max] {
        for (int n = 3; n <= n_max; n += 2) {
            auto rec = check_chi_recurrences(n);
            expect(rec.ok(), rec.mismatches.empty() ? "" : rec.mismatches.front());
        }
        return "odd n <= " + std::to_string(n_max);
    });

    run_check(report, "euler.chi_half_pi_three_way", [n_max] {
        for (int n = 3; n <= n_max; n += 2) chi_at_half_pi(n);  // throws on disagreement
        return "odd n <= " + std::to_string(n_max);
    });
}

void oracle_checks(VerifyReport& report, const VerifyOptions& options) {
    const int oracle_max = std::min(options.oracle_max, oracle::kMaxOracleN);

    run_check(report, "oracle.totals_match_closed_form", [&] {
        for (int n = 3; n <= oracle_max; n += 2)
            expect(oracle::summarize(n, options.jobs).total == critical_point_count(n),
                   "total mismatch" + at_n(n));
        return "odd n <= " + std::to_string(oracle_max);
    });

    run_check(report, "oracle.per_stratum_counts_match_table", [&] {
        for (int n = 3; n <= oracle_max; n += 2) {
            auto counts = oracle::count_by_stratum(n, options.jobs);
            auto pairs = stratum_pairs(n);
            expect(counts.size() == pairs.size(), "stratum pair set mismatch" + at_n(n));
            for (const auto& pair : pairs) {
                auto it = counts.find(pair);
                expect(it != counts.end() && it->second == stratum(n, pair).count,
                       "count mismatch at (" + std::to_string(pair.alpha) + "," +
                           std::to_string(pair.beta) + ")" + at_n(n));
            }
        }
        return "odd n <= " + std::to_string(oracle_max);
    });

    run_check(report, "oracle.per_level_counts_match_spectrum", [&] {
        for (int n = 3; n <= oracle_max; n += 2) {
            auto summary = oracle::summarize(n, options.jobs);
            auto spec = build_spectrum(n);
            expect(summary.per_level.size() == spec.level_count(),
                   "level set size mismatch" + at_n(n));
            for (const auto& level : spec.levels()) {
                BigInt expected;
                for (const auto& st : level.strata) expected += st.count;
                auto it = summary.per_level.find(level.value);
                expect(it != summary.per_level.end() && it->second == expected,
                       "level count mismatch at " + level.value.str() + at_n(n));
            }
        }
        return "odd n <= " + std::to_string(oracle_max);
    });

    run_check(report, "oracle.morse_indices_match_table", [&] {
        for (int n = 3; n <= oracle_max; n += 2)
            expect(oracle::summarize(n, options.jobs).morse_indices_match,
                   "index mismatch" + at_n(n));
        return "odd n <= " + std::to_string(oracle_max);
    });

    run_check(report, "oracle.signature_components", [&] {
        for (int n = 3; n <= oracle_max; n += 2)
            expect(oracle::summarize(n, options.jobs).signatures_match,
                   "signature mismatch" + at_n(n));
        return "sum n-2 and index placement, odd n <= " + std::to_string(oracle_max);
    });

    run_check(report, "oracle.circle_realization_numeric", [&] {
        const int realize_max = std::min({options.realize_max, oracle_max, 13});
        for (int n = 3; n <= realize_max; n += 2)
            oracle::for_each_config(n, [&](const oracle::DegenerateConfig& config) {
                auto errors = oracle::realization_errors(config);
                expect(errors.max_norm_error <= 1e-12, "point off the sphere" + at_n(n));
                expect(errors.max_side_error <= 1e-9, "side length off" + at_n(n));
                expect(errors.winding_error <= 1e-9, "winding off" + at_n(n));
            });
        return "all configs, odd n <= " + std::to_string(realize_max);
    });

    run_check(report, "oracle.windings_above_half_pi_legendre", [&] {
        for (long long s = 1; s <= options.jset_max; ++s)
            expect(oracle::windings_above_half_pi(s) ==
                       legendre_totient(2 * ((s + 1) / 2) - 1, 4 * s + 2),
                   "Legendre count mismatch at s=" + std::to_string(s));
        return "s <= " + std::to_string(options.jset_max);
    });
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    arith_checks(report);
    spectrum_checks(report, options.n_max);
    euler_checks(report, options.n_max);
    oracle_checks(report, options);
    return report;
}

}  // namespace sphpoly
