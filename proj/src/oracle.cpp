#include "sphpoly/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

namespace sphpoly::oracle {

namespace {

double clamp_unit(double v) { return std::min(1.0, std::max(-1.0, v)); }

double spherical_distance(const SpherePoint& u, const SpherePoint& v) {
    return std::acos(clamp_unit(u.x * v.x + u.y * v.y + u.z * v.z));
}

// Aggregates one thread can fill independently; merging is pure addition.
struct Tally {
    std::vector<std::uint64_t> by_pair;  // (s, t) flattened, (m+1)*(m+1)
    std::uint64_t total = 0;
    bool indices_ok = true;
    bool signatures_ok = true;
};

Tally tally_range(int n, std::uint32_t begin, std::uint32_t end) {
    const int m = (n - 1) / 2;
    Tally tally;
    tally.by_pair.assign(static_cast<std::size_t>(m + 1) * (m + 1), 0);
    for (std::uint32_t mask = begin; mask < end; ++mask) {
        TrackWord word{n, mask};
        const int net = word.net();
        const int span = (net > 0 ? net : -net) - 1;
        for (int k = 2; k <= span; k += 2) {
            DegenerateConfig config(word, net > 0 ? k / 2 : -k / 2);
            StratumPair pair = classify(config);
            const int s = pair.s();
            const int t = pair.t();
            ++tally.by_pair[static_cast<std::size_t>(s) * (m + 1) + t];
            ++tally.total;

            if (morse_index(config) != m - s + 2 * t - 1) tally.indices_ok = false;
            auto sig = wall_crossing_signature(config);
            int expected = config.winding > 0 ? sig.first : sig.second;
            if (sig.first + sig.second != n - 2 || morse_index(config) != expected)
                tally.signatures_ok = false;
        }
    }
    return tally;
}

Tally tally_all(int n, unsigned jobs) {
    require_oracle_n(n);
    const std::uint32_t words = 1u << (n - 1);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<std::uint32_t>(jobs, words);
    if (jobs <= 1 || words < 1024) return tally_range(n, 0, words);

    std::vector<Tally> parts(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    const std::uint32_t chunk = words / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        std::uint32_t begin = j * chunk;
        std::uint32_t end = (j + 1 == jobs) ? words : begin + chunk;
        threads.emplace_back([&, j, begin, end] { parts[j] = tally_range(n, begin, end); });
    }
    for (auto& t : threads) t.join();

    Tally merged = std::move(parts[0]);
    for (unsigned j = 1; j < jobs; ++j) {
        merged.total += parts[j].total;
        merged.indices_ok = merged.indices_ok && parts[j].indices_ok;
        merged.signatures_ok = merged.signatures_ok && parts[j].signatures_ok;
        for (std::size_t i = 0; i < merged.by_pair.size(); ++i)
            merged.by_pair[i] += parts[j].by_pair[i];
    }
    return merged;
}

}  // namespace

std::string TrackWord::pattern() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(n));
    for (int side = 1; side <= n; ++side)
        out.push_back(track(side) == Track::Forward ? 'F' : 'B');
    return out;
}

DegenerateConfig::DegenerateConfig(TrackWord w, int winding_) : word(w), winding(winding_) {
    require_oracle_n(word.n);
    if (word.forward_mask >> (word.n - 1))
        throw std::invalid_argument("DegenerateConfig: mask wider than n-1 sides");
    const int net = word.net();
    if (winding == 0 || (winding > 0) != (net > 0))
        throw std::invalid_argument("DegenerateConfig: winding must be nonzero with sign(f-b)");
    if (2 * std::abs(winding) >= std::abs(net))
        throw std::invalid_argument("DegenerateConfig: need 0 < 2|w| < |f-b|");
}

PiFraction DegenerateConfig::realized_angle() const {
    return PiFraction::reduce(2 * std::abs(winding), std::abs(net()));
}

void require_oracle_n(int n) {
    require_odd_n(n);
    if (n > kMaxOracleN)
        throw std::invalid_argument("oracle: n exceeds the brute-force budget of " +
                                    std::to_string(kMaxOracleN));
}

std::vector<DegenerateConfig> enumerate_configs(int n) {
    std::vector<DegenerateConfig> configs;
    for_each_config(n, [&](const DegenerateConfig& c) { configs.push_back(c); });
    return configs;
}

StratumPair classify(const DegenerateConfig& config) {
    return StratumPair{std::abs(config.net()), 2 * std::abs(config.winding)};
}

int morse_index(const DegenerateConfig& config) {
    if (config.winding > 0) return config.back_count() + 2 * config.winding - 1;
    return config.forward_count() - 2 * config.winding - 1;
}

std::pair<int, int> wall_crossing_signature(const DegenerateConfig& config) {
    return {config.back_count() + 2 * config.winding - 1,
            config.forward_count() - 2 * config.winding - 1};
}

std::map<StratumPair, BigInt> count_by_stratum(int n, unsigned jobs) {
    return summarize(n, jobs).per_stratum;
}

Summary summarize(int n, unsigned jobs) {
    Tally tally = tally_all(n, jobs);
    const int m = (n - 1) / 2;

    Summary summary;
    summary.n = n;
    summary.total = BigInt(static_cast<long long>(tally.total));
    summary.morse_indices_match = tally.indices_ok;
    summary.signatures_match = tally.signatures_ok;
    for (int s = 1; s <= m; ++s) {
        for (int t = 1; t <= s; ++t) {
            std::uint64_t c = tally.by_pair[static_cast<std::size_t>(s) * (m + 1) + t];
            if (c == 0) continue;
            StratumPair pair{2 * s + 1, 2 * t};
            summary.per_stratum.emplace(pair, BigInt(static_cast<long long>(c)));
            summary.per_level[PiFraction::reduce(pair.beta, pair.alpha)] +=
                BigInt(static_cast<long long>(c));
        }
    }
    return summary;
}

std::vector<SpherePoint> realize_on_circle(const DegenerateConfig& config) {
    const double a = config.realized_angle().radians();
    std::vector<SpherePoint> points;
    points.reserve(static_cast<std::size_t>(config.word.n));
    double angle = 0.0;
    for (int side = 1; side <= config.word.n; ++side) {
        points.push_back({std::cos(angle), std::sin(angle), 0.0});
        angle += config.word.track(side) == Track::Forward ? a : -a;
    }
    return points;
}

RealizationErrors realization_errors(const DegenerateConfig& config) {
    const auto points = realize_on_circle(config);
    const int n = config.word.n;
    const double a = config.realized_angle().radians();
    const double two_pi = 2.0 * std::numbers::pi;

    RealizationErrors errors;
    double signed_total = 0.0;
    for (int i = 0; i < n; ++i) {
        const SpherePoint& u = points[static_cast<std::size_t>(i)];
        const SpherePoint& v = points[static_cast<std::size_t>((i + 1) % n)];
        errors.max_norm_error = std::max(
            errors.max_norm_error, std::abs(std::sqrt(u.x * u.x + u.y * u.y + u.z * u.z) - 1.0));
        errors.max_side_error =
            std::max(errors.max_side_error, std::abs(spherical_distance(u, v) - a));
        // recover the signed step from coordinates alone; |step| < pi
        double delta = std::atan2(v.y, v.x) - std::atan2(u.y, u.x);
        while (delta > std::numbers::pi) delta -= two_pi;
        while (delta < -std::numbers::pi) delta += two_pi;
        signed_total += delta;
    }
    errors.winding_error = std::abs(signed_total - two_pi * config.winding);
    return errors;
}

BigInt windings_above_half_pi(long long s) {
    if (s < 1) throw std::invalid_argument("windings_above_half_pi: s must be positive");
    long long count = 0;
    for (long long t = s / 2 + 1; t <= s; ++t)
        if (std::gcd(t, 2 * s + 1) == 1) ++count;
    return BigInt(count);
}

}  // namespace sphpoly::oracle
