#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sphpoly {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
// Counts and Euler characteristics here need exact addition, multiplication
// and division by a machine word; nothing fancier is provided.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);
    explicit BigInt(std::string_view decimal);

    static BigInt power_of_two(unsigned long exponent);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    int signum() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    // Quotient and remainder by a machine word; the remainder carries no sign
    // (it is the remainder of the magnitude).  Throws std::domain_error on a
    // zero divisor.
    std::pair<BigInt, std::uint32_t> divmod(std::uint32_t divisor) const;
    // Exact quotient; throws std::logic_error if a remainder is left, since
    // every division in this project is provably exact.
    BigInt div_exact(std::uint32_t divisor) const;

    friend bool operator==(const BigInt&, const BigInt&) = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    std::string to_string() const;
    // Mantissa (sign applied, |mant| in [0.5, 1)) and binary exponent such
    // that the value is mant * 2^exp;  {0, 0} for zero.
    std::pair<double, long> frexp2() const;
    double to_double() const;
    long long to_long_long() const;  // throws std::overflow_error out of range

    std::size_t bit_length() const;

private:
    bool negative_ = false;               // false for zero
    std::vector<std::uint32_t> limbs_;    // little-endian, no high zero limbs

    void trim();
    void mul_word(std::uint32_t factor);
    void add_word(std::uint32_t addend);
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

// C(n, 0..k_max) in one incremental sweep.
std::vector<BigInt> binomial_row(long long n, long long k_max);

}  // namespace sphpoly
