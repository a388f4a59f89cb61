#include "sphpoly/pi_fraction.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace sphpoly {

PiFraction PiFraction::reduce(long long p, long long q) {
    if (q <= 0) throw std::invalid_argument("PiFraction: denominator must be positive");
    if (p < 0) throw std::invalid_argument("PiFraction: numerator must be non-negative");
    if (p >= q) throw std::invalid_argument("PiFraction: angle must lie in [0, pi)");
    if (p == 0) return zero();
    long long g = std::gcd(p, q);
    return PiFraction(p / g, q / g);
}

std::string PiFraction::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double PiFraction::radians() const {
    return static_cast<double>(num_) * std::numbers::pi / static_cast<double>(den_);
}

PiFraction mediant(const PiFraction& a, const PiFraction& b) {
    return PiFraction::reduce(a.num() + b.num(), a.den() + b.den());
}

std::ostream& operator<<(std::ostream& os, const PiFraction& f) { return os << f.str(); }

}  // namespace sphpoly
