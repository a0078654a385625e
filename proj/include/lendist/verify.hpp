#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lendist/semigroup.hpp"

namespace lendist {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::int64_t max_n = 200;        // elements checked: 0..max_n
    std::int64_t modulus_max = 24;   // moduli checked: 1..modulus_max
    std::uint64_t seed = 12345;      // subsampling of n when max_n is large
};

/// Self-check suites over one semigroup: oracle equivalence (dynamic
/// program vs brute force), subgroup order and automorphism structure,
/// exponential-sum closed form vs complex evaluation, Fourier consistency
/// of restricted moments, and delta-congruence of lengths.
std::vector<SuiteResult> run_verification(const NumericalSemigroup& s,
                                          const VerifyOptions& options = {});

}  // namespace lendist
