#pragma once

#include <cstdint>
#include <vector>

#include "lendist/arith.hpp"

namespace lendist {

/// A numerical semigroup <n_1,...,n_k> given by its generator list.
///
/// Construction validates the generator list (k >= 2, strictly increasing,
/// positive, gcd 1) and precomputes the invariants used everywhere else:
/// delta (the gcd of consecutive generator differences, which all lengths
/// of a fixed element are congruent modulo) and the lcm / product of the
/// generators. Immutable after construction.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<std::int64_t> generators);

    const std::vector<std::int64_t>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }
    std::int64_t min_generator() const { return gens_.front(); }
    std::int64_t max_generator() const { return gens_.back(); }

    std::int64_t delta() const { return delta_; }
    const BigInt& lcm() const { return lcm_; }
    const BigInt& generator_product() const { return product_; }

    /// {1/n_1, ..., 1/n_k}, the evaluation point of h_p in the main term.
    std::vector<Rational> reciprocal_generators() const;

private:
    std::vector<std::int64_t> gens_;
    std::int64_t delta_;
    BigInt lcm_;
    BigInt product_;
};

}  // namespace lendist
