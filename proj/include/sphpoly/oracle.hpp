#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphpoly/bigint.hpp"
#include "sphpoly/pi_fraction.hpp"
#include "sphpoly/spectrum.hpp"

namespace sphpoly::oracle {

// Degenerate equilateral n-gons live on a great circle; each side either
// agrees with the circle's orientation (forward-track) or opposes it
// (back-track), and the last side is pinned back-track by the orientation
// convention.  A word is the mask of forward sides among the first n-1.
enum class Track : std::uint8_t { Forward, Back };

struct TrackWord {
    int n = 0;
    std::uint32_t forward_mask = 0;  // bits 0..n-2 cover sides 1..n-1

    int forward_count() const { return std::popcount(forward_mask); }
    int back_count() const { return n - forward_count(); }
    int net() const { return 2 * forward_count() - n; }  // forward - back, odd

    Track track(int side) const {  // 1-based; side n is always Back
        if (side < 1 || side > n) throw std::out_of_range("TrackWord: side out of range");
        if (side == n) return Track::Back;
        return (forward_mask >> (side - 1)) & 1u ? Track::Forward : Track::Back;
    }
    std::string pattern() const;  // e.g. "FFBBB"
};

// A word together with an admissible winding number: the side length is then
// forced to 2|w|/|f-b| * pi, so each (word, w) pair is one critical point.
struct DegenerateConfig {
    TrackWord word;
    int winding = 0;

    DegenerateConfig(TrackWord w, int winding);

    int forward_count() const { return word.forward_count(); }
    int back_count() const { return word.back_count(); }
    int net() const { return word.net(); }
    PiFraction realized_angle() const;
};

constexpr int kMinOracleN = 3;
constexpr int kMaxOracleN = 25;  // 2^24 words

// Throws unless n is odd and within the brute-force budget.
void require_oracle_n(int n);

// Visits every config for the given n in a fixed order: words by ascending
// mask, windings by ascending |w|.
template <typename Fn>
void for_each_config(int n, Fn&& fn) {
    require_oracle_n(n);
    const std::uint32_t words = 1u << (n - 1);
    for (std::uint32_t mask = 0; mask < words; ++mask) {
        TrackWord word{n, mask};
        const int net = word.net();
        const int span = (net > 0 ? net : -net) - 1;  // 2|w| < |net|
        for (int k = 2; k <= span; k += 2) {
            int w = net > 0 ? k / 2 : -k / 2;
            fn(DegenerateConfig(word, w));
        }
    }
}

std::vector<DegenerateConfig> enumerate_configs(int n);

// The stratum pair of a config: alpha = |f-b|, beta = 2|w|.
StratumPair classify(const DegenerateConfig& config);

// Morse index of the side-length function at this critical point, from the
// Hessian signature: b+2w-1 when w > 0, f-2w-1 when w < 0.
int morse_index(const DegenerateConfig& config);

// Hessian signature (positive, negative inertia) of the wall-crossing
// function (the open-chain endpoint distance) at the same polygon; the
// components always sum to n-2.
std::pair<int, int> wall_crossing_signature(const DegenerateConfig& config);

// Exhaustive per-stratum counts (optionally multi-threaded); totals etc. are
// packaged by summarize.
std::map<StratumPair, BigInt> count_by_stratum(int n, unsigned jobs = 0);

struct Summary {
    int n = 0;
    BigInt total;
    std::map<StratumPair, BigInt> per_stratum;
    std::map<PiFraction, BigInt> per_level;
    bool morse_indices_match = false;  // every config matches the table index
    bool signatures_match = false;     // inertia sums to n-2, index sits right
};
Summary summarize(int n, unsigned jobs = 0);

// Coordinates of the degenerate polygon on the equator: start at angle 0 and
// step +a per forward side, -a per back side.
struct SpherePoint {
    double x = 0, y = 0, z = 0;
};
std::vector<SpherePoint> realize_on_circle(const DegenerateConfig& config);

struct RealizationErrors {
    double max_norm_error = 0;   // | |u| - 1 |
    double max_side_error = 0;   // | d(u_i, u_{i+1}) - a |, wrap included
    double winding_error = 0;    // | total signed angle - 2*pi*w |
};
RealizationErrors realization_errors(const DegenerateConfig& config);

// Brute-force count of windings t in s/2+1..s coprime to 2s+1 (the strata
// with value above pi/2 at alpha = 2s+1); predicted by a Legendre totient.
BigInt windings_above_half_pi(long long s);

}  // namespace sphpoly::oracle
