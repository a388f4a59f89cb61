// Command-line front end: spectra, Euler characteristics, chi tables, the
// cross-check suite, the brute-force oracle and asymptotic ratio reports for
// the side-length Morse function on regular spherical polygon spaces.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sphpoly/euler_char.hpp"
#include "sphpoly/oracle.hpp"
#include "sphpoly/spectrum.hpp"
#include "sphpoly/totients.hpp"
#include "sphpoly/verify.hpp"

using json = nlohmann::ordered_json;
using namespace sphpoly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgument = 2;
constexpr int kExitSnapFailed = 3;

constexpr const char* kSchemaVersion = "1";

struct SnapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// angle parsing

// Best rational approximation p/q to x with q <= max_den, by walking the
// continued fraction and trying the final semiconvergent.
std::pair<long long, long long> best_rational(double x, long long max_den) {
    long long p0 = 0, q0 = 1;  // previous convergent
    long long p1 = 1, q1 = 0;  // current convergent frame
    double rest = x;
    for (int term = 0; term < 64; ++term) {
        double floor_term = std::floor(rest);
        long long a = static_cast<long long>(floor_term);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 > max_den) {
            // largest admissible semiconvergent of the last step
            long long k = (max_den - q0) / q1;
            long long ps = k * p1 + p0;
            long long qs = k * q1 + q0;
            auto err = [x](long long p, long long q) {
                return std::abs(x - static_cast<double>(p) / static_cast<double>(q));
            };
            if (qs > 0 && err(ps, qs) < err(p1, q1)) return {ps, qs};
            return {p1, q1};
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = rest - floor_term;
        if (frac < 1e-15) break;
        rest = 1.0 / frac;
    }
    return {p1, q1};
}

// "p/q" means (p/q)*pi exactly; a decimal means x*pi and needs --snap-den.
PiFraction parse_angle(const std::string& text, long long snap_den) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long p = 0, q = 0;
        try {
            p = std::stoll(text.substr(0, slash));
            q = std::stoll(text.substr(slash + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("angle '" + text + "' is not of the form p/q");
        }
        PiFraction a = PiFraction::reduce(p, q);
        if (a.is_zero()) throw std::invalid_argument("angle must lie strictly in (0, pi)");
        return a;
    }
    double x = 0;
    try {
        std::size_t used = 0;
        x = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("angle '" + text + "' is neither p/q nor a decimal");
    }
    if (snap_den <= 0)
        throw std::invalid_argument("decimal angles require --snap-den");
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("decimal angle must lie strictly in (0, 1) (units of pi)");
    auto [p, q] = best_rational(x, snap_den);
    if (q <= 0 || p <= 0 || p >= q ||
        std::abs(x - static_cast<double>(p) / static_cast<double>(q)) > 1e-9)
        throw SnapError("no fraction with denominator <= " + std::to_string(snap_den) +
                        " lies within 1e-9 of " + text);
    return PiFraction::reduce(p, q);
}

// ---------------------------------------------------------------------------
// rendering helpers

json fraction_json(const PiFraction& f) { return json{{"num", f.num()}, {"den", f.den()}}; }

json stratum_json(const CriticalStratum& st) {
    return json{{"alpha", st.pair.alpha},
                {"beta", st.pair.beta},
                {"value", fraction_json(st.value)},
                {"count", st.count.to_string()},
                {"index", st.index}};
}

void emit_record(const std::string& command, int n, json payload) {
    json record{{"schema_version", kSchemaVersion},
                {"command", command},
                {"n", n},
                {"payload", std::move(payload)}};
    std::cout << record.dump(2) << "\n";
}

std::string pi_str(const PiFraction& f) { return f.str() + "*pi"; }

// ---------------------------------------------------------------------------
// spectrum command

int cmd_spectrum(int n, const std::string& format) {
    auto spec = build_spectrum(n);
    BigInt total = spec.total_count();
    auto phi = critical_value_count_u64(n);
    auto psi = count_above_half_pi_u64(n);

    if (format == "json") {
        json levels = json::array();
        for (const auto& level : spec.levels()) {
            json strata = json::array();
            for (const auto& st : level.strata) strata.push_back(stratum_json(st));
            levels.push_back(json{{"value", fraction_json(level.value)},
                                  {"strata", std::move(strata)}});
        }
        emit_record("spectrum", n,
                    json{{"m", spec.m()},
                         {"phi", phi},
                         {"psi", psi},
                         {"total_critical_points", total.to_string()},
                         {"levels", std::move(levels)}});
    } else if (format == "csv") {
        std::cout << "level,value,alpha,beta,count,index\n";
        for (std::size_t i = 1; i <= spec.level_count(); ++i)
            for (const auto& st : spec.zeta(i).strata)
                std::cout << i << "," << st.value.str() << "," << st.pair.alpha << ","
                          << st.pair.beta << "," << st.count << "," << st.index << "\n";
    } else {
        std::printf("critical spectrum for n = %d (m = %d)\n", n, spec.m());
        std::printf("%5s  %-12s %6s %6s %16s %6s\n", "i", "value", "alpha", "beta", "count",
                    "index");
        for (std::size_t i = 1; i <= spec.level_count(); ++i)
            for (const auto& st : spec.zeta(i).strata)
                std::printf("%5zu  %-12s %6d %6d %16s %6d\n", i, pi_str(st.value).c_str(),
                            st.pair.alpha, st.pair.beta, st.count.to_string().c_str(), st.index);
        std::printf("critical values: %llu   critical points: %s   above pi/2: %llu\n",
                    static_cast<unsigned long long>(phi), total.to_string().c_str(),
                    static_cast<unsigned long long>(psi));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// chi command

int cmd_chi(int n, const std::string& angle_text, long long snap_den,
            const std::string& format) {
    PiFraction a = parse_angle(angle_text, snap_den);
    auto spec = build_spectrum(n);
    auto result = euler_characteristic(spec, a);

    if (format == "json") {
        json position{{"kind", result.position.at_critical ? "at-critical" : "interval"},
                      {"index", result.position.index}};
        if (result.position.at_critical)
            position["value"] = fraction_json(spec.zeta(result.position.index).value);
        json contributions = json::array();
        for (const auto& c : result.contributions) {
            json entry = stratum_json(c.stratum);
            entry["increment"] = c.increment.to_string();
            contributions.push_back(std::move(entry));
        }
        emit_record("chi", n,
                    json{{"a", fraction_json(a)},
                         {"position", std::move(position)},
                         {"chi", result.chi.to_string()},
                         {"contributions", std::move(contributions)}});
    } else if (format == "csv") {
        std::cout << "value,alpha,beta,count,index,increment\n";
        for (const auto& c : result.contributions)
            std::cout << c.stratum.value.str() << "," << c.stratum.pair.alpha << ","
                      << c.stratum.pair.beta << "," << c.stratum.count << "," << c.stratum.index
                      << "," << c.increment << "\n";
    } else {
        std::printf("n = %d   a = %s\n", n, pi_str(a).c_str());
        if (result.position.at_critical) {
            std::printf("position: at-critical level %zu\n", result.position.index);
        } else {
            std::size_t i = result.position.index;
            std::string lo = i == 0 ? "0" : pi_str(spec.zeta(i).value);
            std::string hi =
                i == spec.level_count() ? "pi" : pi_str(spec.zeta(i + 1).value);
            std::printf("position: interval %zu of (%s, %s)\n", i, lo.c_str(), hi.c_str());
        }
        std::printf("chi = %s\n", result.chi.to_string().c_str());
        if (!result.contributions.empty()) {
            std::printf("crossings from above pi:\n");
            for (const auto& c : result.contributions)
                std::printf("  %-12s (%d,%d)  count %-12s index %-3d -> %s\n",
                            pi_str(c.stratum.value).c_str(), c.stratum.pair.alpha,
                            c.stratum.pair.beta, c.stratum.count.to_string().c_str(),
                            c.stratum.index, c.increment.to_string().c_str());
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// omega command (full chi table)

int cmd_omega(int n, const std::string& format) {
    auto spec = build_spectrum(n);
    auto table = chi_table(spec);
    const long long count = static_cast<long long>(table.size());
    const int m = spec.m();

    auto low_covers = [&](long long i) { return i <= lower_edge_count(m); };
    auto high_covers = [&](long long i) { return count - 1 - i <= upper_edge_count(m); };

    bool all_match = true;
    json rows = json::array();
    std::vector<std::string> plain_rows;
    for (long long i = 0; i < count; ++i) {
        json row{{"i", i}, {"chi", table[static_cast<std::size_t>(i)].to_string()}};
        std::string low = "-", high = "-";
        if (low_covers(i)) {
            BigInt v = chi_closed_form_low(n, i);
            bool match = v == table[static_cast<std::size_t>(i)];
            all_match = all_match && match;
            row["closed_low"] = v.to_string();
            row["closed_low_match"] = match;
            low = v.to_string() + (match ? "" : " MISMATCH");
        } else {
            row["closed_low"] = nullptr;
            row["closed_low_match"] = nullptr;
        }
        if (high_covers(i)) {
            BigInt v = chi_closed_form_high(n, count - 1 - i);
            bool match = v == table[static_cast<std::size_t>(i)];
            all_match = all_match && match;
            row["closed_high"] = v.to_string();
            row["closed_high_match"] = match;
            high = v.to_string() + (match ? "" : " MISMATCH");
        } else {
            row["closed_high"] = nullptr;
            row["closed_high_match"] = nullptr;
        }
        rows.push_back(std::move(row));
        char buf[160];
        std::snprintf(buf, sizeof buf, "%5lld  %-20s %-20s %-20s", i,
                      table[static_cast<std::size_t>(i)].to_string().c_str(), low.c_str(),
                      high.c_str());
        plain_rows.emplace_back(buf);
    }

    if (format == "json") {
        emit_record("omega", n,
                    json{{"phi", count}, {"closed_forms_match", all_match}, {"table", rows}});
    } else if (format == "csv") {
        std::cout << "i,chi,closed_low,closed_high\n";
        for (long long i = 0; i < count; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            auto cell = [&](const char* key) {
                return row[key].is_null() ? std::string() : row[key].get<std::string>();
            };
            std::cout << i << "," << row["chi"].get<std::string>() << "," << cell("closed_low")
                      << "," << cell("closed_high") << "\n";
        }
    } else {
        std::printf("chi per interval for n = %d (%lld intervals)\n", n, count);
        std::printf("%5s  %-20s %-20s %-20s\n", "i", "chi", "closed[low]", "closed[high]");
        for (const auto& row : plain_rows) std::printf("%s\n", row.c_str());
        std::printf("closed forms match: %s\n", all_match ? "yes" : "NO");
    }
    return all_match ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// verify command

int cmd_verify(const VerifyOptions& options, bool inject_fault, const std::string& format) {
    VerifyReport report = run_verification(options);
    if (inject_fault)
        report.checks.push_back({"injected.synthetic_failure", false, "requested via flag"});

    if (format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        emit_record("verify", options.n_max,
                    json{{"n_max", options.n_max},
                         {"oracle_max", options.oracle_max},
                         {"all_passed", report.all_passed()},
                         {"checks", std::move(checks)}});
    } else if (format == "csv") {
        std::cout << "name,passed,detail\n";
        for (const auto& c : report.checks)
            std::cout << c.name << "," << (c.passed ? "yes" : "no") << ",\"" << c.detail
                      << "\"\n";
    } else {
        for (const auto& c : report.checks)
            std::printf("%s %-46s %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                        c.detail.c_str());
        std::printf("verification: %zu/%zu checks passed\n",
                    report.checks.size() - report.failed_count(), report.checks.size());
    }
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// oracle command

int cmd_oracle(int n, unsigned jobs, const std::string& format) {
    auto summary = oracle::summarize(n, jobs);
    auto spec = build_spectrum(n);
    BigInt expected_total = critical_point_count(n);

    bool all_match = summary.total == expected_total && summary.morse_indices_match &&
                     summary.signatures_match;
    json strata = json::array();
    for (const auto& [pair, count] : summary.per_stratum) {
        BigInt expected = stratum(n, pair).count;
        bool match = count == expected;
        all_match = all_match && match;
        strata.push_back(json{{"alpha", pair.alpha},
                              {"beta", pair.beta},
                              {"value", fraction_json(PiFraction::reduce(pair.beta, pair.alpha))},
                              {"count", count.to_string()},
                              {"expected", expected.to_string()},
                              {"index", stratum(n, pair).index},
                              {"match", match}});
    }
    json levels = json::array();
    for (const auto& level : spec.levels()) {
        BigInt expected;
        for (const auto& st : level.strata) expected += st.count;
        auto it = summary.per_level.find(level.value);
        BigInt counted = it == summary.per_level.end() ? BigInt(0) : it->second;
        bool match = counted == expected;
        all_match = all_match && match;
        levels.push_back(json{{"value", fraction_json(level.value)},
                              {"count", counted.to_string()},
                              {"expected", expected.to_string()},
                              {"match", match}});
    }

    if (format == "json") {
        emit_record("oracle", n,
                    json{{"total", summary.total.to_string()},
                         {"expected_total", expected_total.to_string()},
                         {"morse_indices_match", summary.morse_indices_match},
                         {"signatures_match", summary.signatures_match},
                         {"all_match", all_match},
                         {"strata", std::move(strata)},
                         {"levels", std::move(levels)}});
    } else if (format == "csv") {
        std::cout << "alpha,beta,count,expected,match\n";
        for (const auto& row : strata)
            std::cout << row["alpha"] << "," << row["beta"] << ","
                      << row["count"].get<std::string>() << ","
                      << row["expected"].get<std::string>() << ","
                      << (row["match"].get<bool>() ? "yes" : "no") << "\n";
    } else {
        std::printf("brute-force enumeration for n = %d\n", n);
        std::printf("%6s %6s %16s %16s %6s\n", "alpha", "beta", "counted", "expected", "match");
        for (const auto& row : strata)
            std::printf("%6d %6d %16s %16s %6s\n", row["alpha"].get<int>(),
                        row["beta"].get<int>(), row["count"].get<std::string>().c_str(),
                        row["expected"].get<std::string>().c_str(),
                        row["match"].get<bool>() ? "yes" : "no");
        std::printf("total: %s (expected %s)   indices: %s   signatures: %s\n",
                    summary.total.to_string().c_str(), expected_total.to_string().c_str(),
                    summary.morse_indices_match ? "ok" : "MISMATCH",
                    summary.signatures_match ? "ok" : "MISMATCH");
        std::printf("oracle agreement: %s\n", all_match ? "yes" : "NO");
    }
    return all_match ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// asymptotics command

int cmd_asymptotics(int n_max, const std::string& format) {
    require_odd_n(n_max);
    std::vector<int> samples;
    for (int n = 3; n < n_max; n = std::max(n + 2, static_cast<int>(n * 1.6) | 1))
        samples.push_back(n);
    samples.push_back(n_max);

    json rows = json::array();
    for (int n : samples) {
        const int m = (n - 1) / 2;
        const double pi = std::numbers::pi;

        BigInt points = critical_point_count(n);
        auto [mant, exp] = points.frexp2();
        // asymptote 2^(2m-1) * (-1 + (2m+1)/sqrt(pi m)); divide the power of
        // two through the mantissa to stay inside double range
        double asym_factor = -1.0 + (2.0 * m + 1.0) / std::sqrt(pi * m);
        double points_ratio =
            std::ldexp(mant, static_cast<int>(exp - (2 * static_cast<long>(m) - 1))) /
            asym_factor;

        auto values = critical_value_count_u64(n);
        double values_ratio = static_cast<double>(values) * pi * pi / (static_cast<double>(n) * n);
        auto odd_sum = odd_totient_sum_u64(static_cast<std::uint64_t>(n));
        double odd_sum_ratio =
            static_cast<double>(odd_sum) * pi * pi / (2.0 * static_cast<double>(n) * n);

        rows.push_back(json{{"n", n},
                            {"m", m},
                            {"critical_points", points.to_string()},
                            {"critical_points_ratio", points_ratio},
                            {"critical_values", values},
                            {"critical_values_ratio", values_ratio},
                            {"odd_totient_sum", odd_sum},
                            {"odd_totient_sum_ratio", odd_sum_ratio}});
    }

    if (format == "json") {
        emit_record("asymptotics", n_max, json{{"rows", std::move(rows)}});
    } else if (format == "csv") {
        std::cout << "n,critical_points,points_ratio,critical_values,values_ratio,"
                     "odd_totient_sum,odd_sum_ratio\n";
        for (const auto& row : rows)
            std::printf("%d,%s,%.6f,%llu,%.6f,%llu,%.6f\n", row["n"].get<int>(),
                        row["critical_points"].get<std::string>().c_str(),
                        row["critical_points_ratio"].get<double>(),
                        row["critical_values"].get<unsigned long long>(),
                        row["critical_values_ratio"].get<double>(),
                        row["odd_totient_sum"].get<unsigned long long>(),
                        row["odd_totient_sum_ratio"].get<double>());
    } else {
        std::printf("%7s %10s %12s %10s %12s %12s %12s\n", "n", "|U|~digits", "points/asym",
                    "values", "values/asym", "odd phi sum", "sum/asym");
        for (const auto& row : rows)
            std::printf("%7d %10zu %12.6f %10llu %12.6f %12llu %12.6f\n", row["n"].get<int>(),
                        row["critical_points"].get<std::string>().size(),
                        row["critical_points_ratio"].get<double>(),
                        row["critical_values"].get<unsigned long long>(),
                        row["critical_values_ratio"].get<double>(),
                        row["odd_totient_sum"].get<unsigned long long>(),
                        row["odd_totient_sum_ratio"].get<double>());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morse spectrum engine for regular spherical polygon spaces"};
    app.require_subcommand(1);

    std::string format = "plain";

    int n = 0;
    std::string angle;
    long long snap_den = 0;
    VerifyOptions verify_options;
    bool inject_fault = false;
    unsigned jobs = 0;
    int n_max_asym = 2001;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
    };

    auto* spectrum_cmd = app.add_subcommand("spectrum", "critical values, counts and indices");
    spectrum_cmd->add_option("--n", n, "odd polygon size >= 3")->required();
    add_format(spectrum_cmd);

    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic at a side length");
    chi_cmd->add_option("--n", n, "odd polygon size >= 3")->required();
    chi_cmd->add_option("--a", angle, "angle in units of pi: p/q, or a decimal with --snap-den")
        ->required();
    chi_cmd->add_option("--snap-den", snap_den, "max denominator for snapping decimal angles");
    add_format(chi_cmd);

    auto* omega_cmd = app.add_subcommand("omega", "chi on every interval between critical values");
    omega_cmd->add_option("--n", n, "odd polygon size >= 3")->required();
    add_format(omega_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run every cross-check");
    verify_cmd->add_option("--n-max", verify_options.n_max, "identity sweep bound (odd)");
    verify_cmd->add_option("--oracle-max", verify_options.oracle_max, "brute-force bound (odd)");
    verify_cmd->add_option("--jobs", verify_options.jobs, "oracle threads (0 = all cores)");
    verify_cmd->add_flag("--inject-fault", inject_fault)->group("");  // test seam
    add_format(verify_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration vs the spectrum");
    oracle_cmd->add_option("--n", n, "odd polygon size within the brute-force budget")
        ->required();
    oracle_cmd->add_option("--jobs", jobs, "threads (0 = all cores)");
    add_format(oracle_cmd);

    auto* asym_cmd = app.add_subcommand("asymptotics", "exact counts against their asymptotes");
    asym_cmd->add_option("--n-max", n_max_asym, "largest odd n to sample");
    add_format(asym_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgument;
    }

    try {
        if (spectrum_cmd->parsed()) return cmd_spectrum(n, format);
        if (chi_cmd->parsed()) return cmd_chi(n, angle, snap_den, format);
        if (omega_cmd->parsed()) return cmd_omega(n, format);
        if (verify_cmd->parsed()) return cmd_verify(verify_options, inject_fault, format);
        if (oracle_cmd->parsed()) return cmd_oracle(n, jobs, format);
        if (asym_cmd->parsed()) return cmd_asymptotics(n_max_asym, format);
    } catch (const SnapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSnapFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgument;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgument;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitBadArgument;
}
