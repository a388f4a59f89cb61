#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "sphpoly/bigint.hpp"
#include "sphpoly/pi_fraction.hpp"

namespace sphpoly {

// Index of one critical stratum of the side-length function on the space of
// equilateral spherical n-gons: alpha = |forward - back| track count of the
// underlying degenerate polygons, beta = twice their winding number.  alpha is
// odd, beta even, beta < alpha <= n.
struct StratumPair {
    int alpha = 0;
    int beta = 0;

    int s() const { return (alpha - 1) / 2; }
    int t() const { return beta / 2; }

    friend bool operator==(const StratumPair&, const StratumPair&) = default;
    friend auto operator<=>(const StratumPair&, const StratumPair&) = default;
};

// One stratum's row of data: all its critical points share the critical value
// beta/alpha*pi, the multiplicity C(n, m-s) and the Morse index m-s+2t-1.
struct CriticalStratum {
    StratumPair pair;
    PiFraction value;
    BigInt count;
    int index = 0;
};

// All strata sharing one reduced critical value.
struct Level {
    PiFraction value;
    std::vector<CriticalStratum> strata;
};

// The full critical spectrum of a fixed odd n: levels strictly increasing,
// each stratum pair appearing exactly once.  Level subscripts are 1-based to
// match the usual zeta_1 < zeta_2 < ... ordering of critical values.
class Spectrum {
public:
    Spectrum(int n, std::vector<Level> levels);

    int n() const { return n_; }
    int m() const { return (n_ - 1) / 2; }
    std::size_t level_count() const { return levels_.size(); }
    const std::vector<Level>& levels() const { return levels_; }

    const Level& zeta(std::size_t i) const;  // 1-based, 1..level_count()

    // 1-based level subscript when a is a critical value.
    std::optional<std::size_t> level_of(const PiFraction& a) const;
    // i such that zeta_i < a < zeta_{i+1} (with zeta_0 = 0, zeta_{count+1} =
    // pi); throws if a is critical or the zero sentinel.
    std::size_t interval_of(const PiFraction& a) const;

    BigInt total_count() const;

private:
    int n_;
    std::vector<Level> levels_;
};

// Throws std::invalid_argument unless n is an odd integer >= 3; returns m.
int require_odd_n(long long n);

// All stratum pairs for a given n, sorted by (alpha, beta).
std::vector<StratumPair> stratum_pairs(int n);

bool is_stratum_pair(int n, const StratumPair& pair);

// The data row for one pair; rejects pairs outside the index set.
CriticalStratum stratum(int n, const StratumPair& pair);

Spectrum build_spectrum(int n);

// Number of distinct critical values: half the totient sum over odd moduli
// 3..n.  Equals build_spectrum(n).level_count(), which the tests pin.
std::uint64_t critical_value_count_u64(int n);
BigInt critical_value_count(int n);

// Total number of critical points, closed form (4^m and a factorial ratio)
// and the direct weighted stratum sum; the two must agree.
BigInt critical_point_count(int n);
BigInt critical_point_count_by_strata(int n);

// How many critical values exceed pi/2 (a Legendre-totient sum), and the
// values themselves from the (s, t) parametrization, sorted and deduplicated.
std::uint64_t count_above_half_pi_u64(int n);
BigInt count_above_half_pi(int n);
std::vector<PiFraction> above_half_pi_values(int n);

// Position of pi/2 in the spectrum: pi/2 lies in (below, above) and exactly k
// critical values sit at or below it; below is the zero sentinel when k = 0.
struct HalfPiPosition {
    long long k = 0;
    PiFraction below;
    PiFraction above;
};
HalfPiPosition half_pi_position(int n);

// Closed forms for the leading and trailing critical values.  The low form
// covers subscripts 1..lower_edge_count(m), the high form subscripts
// level_count-upper_edge_count(m)..level_count; each names the unique
// (coprime) stratum pair at that level.
inline long long lower_edge_count(long long m) { return m / 2 + 1; }
inline long long upper_edge_count(long long m) { return 2 * m / 3; }

enum class SpectrumEdge { Low, High };

struct EdgeLevel {
    PiFraction value;
    StratumPair pair;
};
EdgeLevel edge_level(int n, SpectrumEdge which, long long i);

}  // namespace sphpoly
