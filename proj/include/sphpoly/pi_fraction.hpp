#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace sphpoly {

// An exact angle (num/den)*pi, stored reduced with 0 < num < den.  The single
// sentinel zero() (0/1) stands for the conventional lower interval endpoint;
// no other angle outside (0, pi) is representable.
class PiFraction {
public:
    constexpr PiFraction() = default;  // zero()

    static constexpr PiFraction zero() { return PiFraction(); }
    static PiFraction reduce(long long p, long long q);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend bool operator==(const PiFraction&, const PiFraction&) = default;
    std::strong_ordering operator<=>(const PiFraction& rhs) const {
        __int128 lhs_cross = static_cast<__int128>(num_) * rhs.den_;
        __int128 rhs_cross = static_cast<__int128>(rhs.num_) * den_;
        if (lhs_cross < rhs_cross) return std::strong_ordering::less;
        if (lhs_cross > rhs_cross) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const;       // "p/q"
    double radians() const;        // num*pi/den, for numeric consumers only

private:
    constexpr PiFraction(long long p, long long q) : num_(p), den_(q) {}
    long long num_ = 0;
    long long den_ = 1;
};

// Strictly between its arguments whenever they differ.
PiFraction mediant(const PiFraction& a, const PiFraction& b);

std::ostream& operator<<(std::ostream& os, const PiFraction& f);

}  // namespace sphpoly
