#include "sphpoly/bigint.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace sphpoly {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    negative_ = value < 0;
    // two's-complement safe magnitude, including LLONG_MIN
    std::uint64_t mag = negative_ ? -static_cast<std::uint64_t>(value)
                                  : static_cast<std::uint64_t>(value);
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt::BigInt(std::string_view decimal) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < decimal.size() && (decimal[pos] == '+' || decimal[pos] == '-')) {
        neg = decimal[pos] == '-';
        ++pos;
    }
    if (pos == decimal.size())
        throw std::invalid_argument("BigInt: empty decimal string");
    for (; pos < decimal.size(); ++pos) {
        char c = decimal[pos];
        if (c < '0' || c > '9')
            throw std::invalid_argument("BigInt: invalid decimal digit");
        mul_word(10);
        add_word(static_cast<std::uint32_t>(c - '0'));
    }
    negative_ = neg && !limbs_.empty();
}

BigInt BigInt::power_of_two(unsigned long exponent) {
    BigInt r;
    r.limbs_.assign(exponent / 32 + 1, 0);
    r.limbs_.back() = 1u << (exponent % 32);
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

void BigInt::mul_word(std::uint32_t factor) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    trim();
}

void BigInt::add_word(std::uint32_t addend) {
    std::uint64_t carry = addend;
    for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
        std::uint64_t cur = limbs_[i] + carry;
        limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(cur);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (this == &rhs) {
        BigInt copy = rhs;
        return *this += copy;
    }
    if (negative_ == rhs.negative_) {
        // in place, the running-total hot path
        if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t cur = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0u);
            limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            if (carry == 0 && i >= rhs.limbs_.size()) break;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    } else {
        int cmp = compare_magnitude(*this, rhs);
        if (cmp == 0) {
            limbs_.clear();
            negative_ = false;
        } else if (cmp > 0) {
            limbs_ = sub_magnitude(limbs_, rhs.limbs_);
        } else {
            limbs_ = sub_magnitude(rhs.limbs_, limbs_);
            negative_ = rhs.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t a = lhs.limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + a * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.negative_ = lhs.negative_ != rhs.negative_;
    out.trim();
    return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

std::pair<BigInt, std::uint32_t> BigInt::divmod(std::uint32_t divisor) const {
    if (divisor == 0) throw std::domain_error("BigInt: division by zero");
    BigInt quotient;
    quotient.limbs_.assign(limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        quotient.limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    quotient.negative_ = negative_;
    quotient.trim();
    return {std::move(quotient), static_cast<std::uint32_t>(rem)};
}

BigInt BigInt::div_exact(std::uint32_t divisor) const {
    auto [q, r] = divmod(divisor);
    if (r != 0) throw std::logic_error("BigInt: division expected to be exact");
    return q;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (negative_ != rhs.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int cmp = compare_magnitude(*this, rhs);
    if (negative_) cmp = -cmp;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> groups;  // base 10^9, little-endian
    BigInt work = abs();
    while (!work.is_zero()) {
        auto [q, r] = work.divmod(1000000000u);
        groups.push_back(r);
        work = std::move(q);
    }
    std::string out;
    if (negative_) out.push_back('-');
    out += std::to_string(groups.back());
    char buf[16];
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", groups[i]);
        out += buf;
    }
    return out;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) + std::bit_width(limbs_.back());
}

std::pair<double, long> BigInt::frexp2() const {
    if (limbs_.empty()) return {0.0, 0};
    const long bits = static_cast<long>(bit_length());
    // collect the top (up to) 64 bits, aligned so bit 63 is the leading bit
    std::uint64_t top = 0;
    for (int k = 0; k < 3; ++k) {
        long idx = static_cast<long>(limbs_.size()) - 1 - k;
        if (idx < 0) break;
        long up = 64 - bits + 32 * idx;  // destination of this limb's bit 0
        if (up >= 0 && up < 64)
            top |= static_cast<std::uint64_t>(limbs_[idx]) << up;
        else if (up < 0 && up > -32)
            top |= static_cast<std::uint64_t>(limbs_[idx]) >> -up;
    }
    double mant = std::ldexp(static_cast<double>(top), -64);
    if (negative_) mant = -mant;
    return {mant, bits};
}

double BigInt::to_double() const {
    auto [mant, exp] = frexp2();
    return std::ldexp(mant, static_cast<int>(std::min<long>(exp, 5000)));
}

long long BigInt::to_long_long() const {
    if (limbs_.empty()) return 0;
    if (limbs_.size() > 2) throw std::overflow_error("BigInt: value exceeds long long");
    std::uint64_t mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (mag > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
        throw std::overflow_error("BigInt: value exceeds long long");
    long long v = static_cast<long long>(mag);
    return negative_ ? -v : v;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (n > 0xffffffffll) throw std::invalid_argument("binomial: n too large");
    if (k < 0 || k > n) return BigInt();
    if (k > n - k) k = n - k;
    BigInt value(1);
    for (long long j = 1; j <= k; ++j) {
        value = value * BigInt(n - k + j);
        value = value.div_exact(static_cast<std::uint32_t>(j));
    }
    return value;
}

std::vector<BigInt> binomial_row(long long n, long long k_max) {
    if (n < 0 || k_max < 0 || k_max > n)
        throw std::invalid_argument("binomial_row: need 0 <= k_max <= n");
    if (n > 0xffffffffll) throw std::invalid_argument("binomial_row: n too large");
    std::vector<BigInt> row;
    row.reserve(static_cast<std::size_t>(k_max) + 1);
    row.emplace_back(1);
    for (long long k = 0; k < k_max; ++k) {
        BigInt next = row.back() * BigInt(n - k);
        row.push_back(next.div_exact(static_cast<std::uint32_t>(k + 1)));
    }
    return row;
}

}  // namespace sphpoly
