#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lendist/arith.hpp"
#include "lendist/semigroup.hpp"

namespace lendist {

/// One factorization n = a_1 n_1 + ... + a_k n_k with length = sum a_j.
struct Factorization {
    std::vector<std::int64_t> coefficients;
    std::int64_t length = 0;
};

/// The length multiset of a fixed element n, stored sparsely as
/// length -> multiplicity. Empty iff n is not in the semigroup.
class LengthDistribution {
public:
    LengthDistribution() = default;
    LengthDistribution(std::int64_t element, std::map<std::int64_t, BigInt> counts);

    std::int64_t element() const { return element_; }
    const std::map<std::int64_t, BigInt>& counts() const { return counts_; }
    const BigInt& total() const { return total_; }

    bool empty() const { return counts_.empty(); }
    std::int64_t min_length() const;  // requires nonempty
    std::int64_t max_length() const;  // requires nonempty

private:
    std::int64_t element_ = 0;
    std::map<std::int64_t, BigInt> counts_;
    BigInt total_ = 0;
};

struct BruteForceLimits {
    std::int64_t max_element = 5000;        // oracle refuses larger n
    std::uint64_t max_results = 10'000'000;  // hard error on exceed
};

/// Exhaustive recursive enumeration of all factorizations of n, in
/// lexicographic coefficient order. Verification oracle only; the engine
/// for real workloads is LengthTable / length_distribution below.
std::vector<Factorization> factorizations_bruteforce(const NumericalSemigroup& s,
                                                     std::int64_t n,
                                                     const BruteForceLimits& limits = {});

/// Length-indexed counting table for every element value 0..n_max at once.
///
/// State is counts[value][length]; one unbounded-knapsack pass per
/// generator applies counts[v][l] += counts[v - g][l - 1]. Counts are
/// kept in 64-bit integers with overflow detection; on overflow the
/// whole table is rebuilt in arbitrary precision.
class LengthTable {
public:
    LengthTable(const NumericalSemigroup& s, std::int64_t n_max);

    std::int64_t n_max() const { return n_max_; }
    LengthDistribution row(std::int64_t n) const;

private:
    bool build_small();
    void build_big();

    std::vector<std::int64_t> gens_;
    std::int64_t n_max_;
    std::size_t cols_;  // len_max + 1
    std::vector<std::uint64_t> small_;
    std::vector<BigInt> big_;
    bool big_mode_ = false;
};

/// Length multiset of a single element; agrees exactly with the
/// brute-force oracle wherever both run. Empty distribution when n is
/// not representable.
LengthDistribution length_distribution(const NumericalSemigroup& s, std::int64_t n);

/// One distribution per n in [n_lo, n_hi], emitted in increasing n.
std::vector<LengthDistribution> length_distribution_range(const NumericalSemigroup& s,
                                                          std::int64_t n_lo,
                                                          std::int64_t n_hi);

}  // namespace lendist
