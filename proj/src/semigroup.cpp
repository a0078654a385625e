#include "lendist/semigroup.hpp"

#include <numeric>
#include <stdexcept>

namespace lendist {

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators)
    : gens_(std::move(generators)) {
    if (gens_.size() < 2)
        throw std::invalid_argument("semigroup needs at least two generators");
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        if (gens_[j] <= 0)
            throw std::invalid_argument("generators must be positive");
        if (j > 0 && gens_[j] <= gens_[j - 1])
            throw std::invalid_argument("generators must be strictly increasing and distinct");
    }
    if (gcd_list(gens_) != 1)
        throw std::invalid_argument("generators must have gcd 1 (finite complement)");

    delta_ = 0;
    for (std::size_t j = 1; j < gens_.size(); ++j)
        delta_ = std::gcd(delta_, gens_[j] - gens_[j - 1]);

    lcm_ = lcm_list(gens_);
    product_ = 1;
    for (std::int64_t g : gens_) product_ *= static_cast<long>(g);
}

std::vector<Rational> NumericalSemigroup::reciprocal_generators() const {
    std::vector<Rational> r;
    r.reserve(gens_.size());
    for (std::int64_t g : gens_) r.push_back(make_rational(1, g));
    return r;
}

}  // namespace lendist
