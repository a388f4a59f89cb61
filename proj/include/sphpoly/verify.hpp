#pragma once

#include <string>
#include <vector>

namespace sphpoly {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<Check> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    std::size_t failed_count() const {
        std::size_t k = 0;
        for (const auto& c : checks)
            if (!c.passed) ++k;
        return k;
    }
};

struct VerifyOptions {
    int n_max = 99;           // spectrum / chi identities run over odd n <= n_max
    int oracle_max = 15;      // brute-force enumeration budget
    int realize_max = 13;     // numeric circle realizations
    long long jset_max = 10000;
    unsigned jobs = 0;        // oracle threads; 0 = hardware default
};

// Runs every cross-check the modules promise, one named entry each.  A check
// that throws is reported as failed with the exception text.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace sphpoly
