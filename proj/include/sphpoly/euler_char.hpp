#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sphpoly/spectrum.hpp"

namespace sphpoly {

// Where an angle sits relative to the critical values: inside the open
// interval (zeta_i, zeta_{i+1}) for some 0 <= i <= level_count (with zeta_0 =
// 0 and zeta_{count+1} = pi), or exactly on level i.
struct AnglePosition {
    bool at_critical = false;
    std::size_t index = 0;  // interval index, or 1-based level subscript
    PiFraction value;       // the queried angle
};

// One stratum's share of a chi computation, in descent order.
struct StratumContribution {
    CriticalStratum stratum;
    BigInt increment;
};

struct ChiResult {
    BigInt chi;
    AnglePosition position;
    std::vector<StratumContribution> contributions;
};

AnglePosition locate(const Spectrum& spec, const PiFraction& a);
AnglePosition locate(int n, const PiFraction& a);

// chi of the space of closed equilateral n-gons with side length a, by Morse
// surgery descent from the empty region above the top critical value (chi =
// 0 there).  Fully crossing a critical point of index r changes chi by
// 2*(-1)^(r+1); landing exactly on a critical value picks up half of that
// (the cone replaces the handle).
ChiResult euler_characteristic(const Spectrum& spec, const PiFraction& a);
ChiResult euler_characteristic(int n, const PiFraction& a);

// An exact sample point inside interval i (0..level_count), by mediants.
PiFraction sample_in_interval(const Spectrum& spec, std::size_t i);

// chi on the open interval (zeta_i, zeta_{i+1}) for 0 <= i <= level_count-1,
// evaluated at a sample point; the value is sample-independent.
BigInt chi_on_interval(const Spectrum& spec, std::size_t i);
BigInt chi_on_interval(int n, std::size_t i);

// All interval values chi_0..chi_{level_count-1} in one descent pass.
std::vector<BigInt> chi_table(const Spectrum& spec);
std::vector<BigInt> chi_table(int n);

// Closed forms for the table near its two ends:
//   low:  chi_i for 0 <= i <= lower_edge_count(m)
//   high: chi_{level_count-1-i} for 0 <= i <= upper_edge_count(m)
// Both involve a rational prefactor that must divide exactly; a remainder
// throws std::logic_error since it can only mean a bug.
BigInt chi_closed_form_low(int n, long long i);
BigInt chi_closed_form_high(int n, long long i);

// chi at a = pi/2, computed three ways (closed form 2^(2m-1) up to sign,
// surgery descent, and the alternating stratum sum); throws std::logic_error
// if the routes disagree.
BigInt chi_at_half_pi(int n);
BigInt chi_half_pi_stratum_sum(int n);

// Runs the two chi recurrences along the spectrum edges against the descent
// table and reports any mismatch.
struct RecurrenceReport {
    std::vector<std::string> mismatches;
    std::size_t checked = 0;
    bool ok() const { return mismatches.empty(); }
};
RecurrenceReport check_chi_recurrences(int n);

}  // namespace sphpoly
