#include "lendist/enumeration.hpp"

#include <stdexcept>
#include <string>

namespace lendist {

LengthDistribution::LengthDistribution(std::int64_t element,
                                       std::map<std::int64_t, BigInt> counts)
    : element_(element), counts_(std::move(counts)) {
    for (auto it = counts_.begin(); it != counts_.end();) {
        if (it->second == 0) {
            it = counts_.erase(it);
        } else {
            total_ += it->second;
            ++it;
        }
    }
}

std::int64_t LengthDistribution::min_length() const {
    if (counts_.empty()) throw std::logic_error("min_length of empty distribution");
    return counts_.begin()->first;
}

std::int64_t LengthDistribution::max_length() const {
    if (counts_.empty()) throw std::logic_error("max_length of empty distribution");
    return counts_.rbegin()->first;
}

namespace {

void enumerate(const std::vector<std::int64_t>& gens, std::size_t idx,
               std::int64_t remaining, std::int64_t length,
               std::vector<std::int64_t>& coeffs, std::uint64_t max_results,
               std::vector<Factorization>& out) {
    if (idx + 1 == gens.size()) {
        if (remaining % gens[idx] == 0) {
            if (out.size() >= max_results)
                throw std::runtime_error("factorization enumeration exceeded result limit");
            std::int64_t a = remaining / gens[idx];
            coeffs[idx] = a;
            out.push_back({coeffs, length + a});
        }
        return;
    }
    for (std::int64_t a = 0; a * gens[idx] <= remaining; ++a) {
        coeffs[idx] = a;
        enumerate(gens, idx + 1, remaining - a * gens[idx], length + a, coeffs,
                  max_results, out);
    }
    coeffs[idx] = 0;
}

}  // namespace

std::vector<Factorization> factorizations_bruteforce(const NumericalSemigroup& s,
                                                     std::int64_t n,
                                                     const BruteForceLimits& limits) {
    if (n < 0) throw std::invalid_argument("element must be nonnegative");
    if (n > limits.max_element)
        throw std::invalid_argument("brute-force oracle refuses n > " +
                                    std::to_string(limits.max_element));
    std::vector<Factorization> out;
    std::vector<std::int64_t> coeffs(s.generator_count(), 0);
    enumerate(s.generators(), 0, n, 0, coeffs, limits.max_results, out);
    return out;
}

LengthTable::LengthTable(const NumericalSemigroup& s, std::int64_t n_max)
    : gens_(s.generators()), n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("element must be nonnegative");
    cols_ = static_cast<std::size_t>(n_max / gens_.front()) + 1;
    const std::size_t cells = (static_cast<std::size_t>(n_max) + 1) * cols_;
    if (cells > 250'000'000)
        throw std::runtime_error("length table too large (" + std::to_string(cells) +
                                 " cells); reduce n");
    if (!build_small()) {
        big_mode_ = true;
        small_.clear();
        small_.shrink_to_fit();
        build_big();
    }
}

bool LengthTable::build_small() {
    const std::size_t rows = static_cast<std::size_t>(n_max_) + 1;
    small_.assign(rows * cols_, 0);
    small_[0] = 1;  // empty factorization of 0
    for (std::int64_t g : gens_) {
        bool overflow = false;
        for (std::int64_t v = g; v <= n_max_; ++v) {
            const std::uint64_t* prev = small_.data() + static_cast<std::size_t>(v - g) * cols_;
            std::uint64_t* cur = small_.data() + static_cast<std::size_t>(v) * cols_;
            const std::size_t lcap = static_cast<std::size_t>(v / gens_.front());
            for (std::size_t l = 1; l <= lcap; ++l)
                overflow |= __builtin_add_overflow(cur[l], prev[l - 1], &cur[l]);
        }
        if (overflow) return false;
    }
    return true;
}

void LengthTable::build_big() {
    const std::size_t rows = static_cast<std::size_t>(n_max_) + 1;
    big_.assign(rows * cols_, BigInt(0));
    big_[0] = 1;
    for (std::int64_t g : gens_) {
        for (std::int64_t v = g; v <= n_max_; ++v) {
            const BigInt* prev = big_.data() + static_cast<std::size_t>(v - g) * cols_;
            BigInt* cur = big_.data() + static_cast<std::size_t>(v) * cols_;
            const std::size_t lcap = static_cast<std::size_t>(v / gens_.front());
            for (std::size_t l = 1; l <= lcap; ++l)
                if (prev[l - 1] != 0) cur[l] += prev[l - 1];
        }
    }
}

LengthDistribution LengthTable::row(std::int64_t n) const {
    if (n < 0 || n > n_max_) throw std::invalid_argument("element outside table range");
    std::map<std::int64_t, BigInt> counts;
    const std::size_t base = static_cast<std::size_t>(n) * cols_;
    const std::size_t lcap = static_cast<std::size_t>(n / gens_.front());
    for (std::size_t l = 0; l <= lcap; ++l) {
        if (big_mode_) {
            if (big_[base + l] != 0) counts.emplace(static_cast<std::int64_t>(l), big_[base + l]);
        } else if (small_[base + l] != 0) {
            BigInt c;
            mpz_import(c.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &small_[base + l]);
            counts.emplace(static_cast<std::int64_t>(l), c);
        }
    }
    return LengthDistribution(n, std::move(counts));
}

LengthDistribution length_distribution(const NumericalSemigroup& s, std::int64_t n) {
    return LengthTable(s, n).row(n);
}

std::vector<LengthDistribution> length_distribution_range(const NumericalSemigroup& s,
                                                          std::int64_t n_lo,
                                                          std::int64_t n_hi) {
    if (n_lo < 0 || n_lo > n_hi)
        throw std::invalid_argument("invalid range: need 0 <= n_lo <= n_hi");
    LengthTable table(s, n_hi);
    std::vector<LengthDistribution> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) out.push_back(table.row(n));
    return out;
}

}  // namespace lendist
