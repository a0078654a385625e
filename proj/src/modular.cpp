#include "lendist/modular.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "lendist/asymptotics.hpp"

namespace lendist {

namespace {

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

void check_modulus(std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
}

void check_residue(std::int64_t residue, std::int64_t modulus) {
    check_modulus(modulus);
    if (residue < 0 || residue >= modulus)
        throw std::invalid_argument("residue must lie in 0..modulus-1");
}

}  // namespace

GammaSubgroup::GammaSubgroup(const NumericalSemigroup& s, std::int64_t modulus)
    : modulus_(modulus) {
    check_modulus(modulus);
    const auto& gens = s.generators();
    // n_1 t = n_j t (mod N)  <=>  (n_j - n_1) t = 0 (mod N)
    std::vector<std::int64_t> diffs;
    for (std::size_t j = 1; j < gens.size(); ++j)
        diffs.push_back(mod_reduce(gens[j] - gens[0], modulus));
    for (std::int64_t t = 0; t < modulus; ++t) {
        bool in = true;
        for (std::int64_t d : diffs)
            if (mod_mul(d, t, modulus) != 0) { in = false; break; }
        if (in) elements_.push_back(t);
    }

    const std::int64_t m = std::gcd(s.delta(), modulus);
    if (static_cast<std::int64_t>(elements_.size()) != m)
        throw std::logic_error("subgroup order differs from gcd(delta, N)");
    const std::int64_t step = modulus / m;
    for (std::int64_t a = 0; a < m; ++a)
        if (elements_[static_cast<std::size_t>(a)] != a * step)
            throw std::logic_error("subgroup is not generated by N/m");

    const std::int64_t n1 = mod_reduce(gens[0], modulus);
    std::vector<bool> hit(static_cast<std::size_t>(m), false);
    for (std::int64_t t : elements_) {
        std::int64_t image = mod_mul(n1, t, modulus);
        if (!std::binary_search(elements_.begin(), elements_.end(), image))
            throw std::logic_error("alpha image escapes the subgroup");
        std::size_t idx = static_cast<std::size_t>(image / step);
        if (hit[idx]) throw std::logic_error("alpha is not injective");
        hit[idx] = true;
        alpha_.push_back(image);
    }
}

bool GammaSubgroup::contains(std::int64_t t) const {
    return std::binary_search(elements_.begin(), elements_.end(), t);
}

std::int64_t GammaSubgroup::alpha(std::int64_t t) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), t);
    if (it == elements_.end() || *it != t)
        throw std::invalid_argument("alpha of element outside subgroup");
    return alpha_[static_cast<std::size_t>(it - elements_.begin())];
}

GammaSubgroup gamma_subgroup(const NumericalSemigroup& s, std::int64_t modulus) {
    return GammaSubgroup(s, modulus);
}

bool attainable(const NumericalSemigroup& s, std::int64_t modulus, std::int64_t residue,
                std::int64_t n) {
    check_residue(residue, modulus);
    if (n < 0) throw std::invalid_argument("element must be nonnegative");
    const std::int64_t m = std::gcd(s.delta(), modulus);
    return mod_reduce(n, m) == mod_mul(mod_reduce(residue, m), mod_reduce(s.min_generator(), m), m);
}

std::int64_t exponential_sum(const NumericalSemigroup& s, std::int64_t modulus,
                             std::int64_t residue, std::int64_t n) {
    check_residue(residue, modulus);
    const std::int64_t m = std::gcd(s.delta(), modulus);
    const std::int64_t value = attainable(s, modulus, residue, n) ? m : 0;
#ifndef NDEBUG
    const std::complex<double> direct = exponential_sum_complex(s, modulus, residue, n);
    assert(std::abs(direct - std::complex<double>(static_cast<double>(value), 0.0)) < 1e-9);
#endif
    return value;
}

std::complex<double> exponential_sum_complex(const NumericalSemigroup& s, std::int64_t modulus,
                                             std::int64_t residue, std::int64_t n) {
    check_residue(residue, modulus);
    const GammaSubgroup gamma(s, modulus);
    std::complex<double> sum = 0.0;
    for (std::int64_t t : gamma.elements()) {
        // exponent i*alpha(t) - t*n reduced mod N
        std::int64_t e = mod_reduce(mod_mul(residue, gamma.alpha(t), modulus) -
                                        mod_mul(mod_reduce(n, modulus), t, modulus),
                                    modulus);
        double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(modulus);
        sum += std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

bool common_zero_check(const NumericalSemigroup& s, std::int64_t modulus, std::int64_t r,
                       std::int64_t t) {
    check_residue(r, modulus);
    check_residue(t, modulus);

    const GammaSubgroup gamma(s, modulus);
    const bool algebraic = gamma.contains(t) && gamma.contains(r) && gamma.alpha(t) == r;

    // phi_r^j(zeta^t) = 1 - zeta^{t n_j - r}; numeric evaluation of all k values
    bool numeric = true;
    for (std::int64_t g : s.generators()) {
        std::int64_t e = mod_reduce(mod_mul(mod_reduce(g, modulus), t, modulus) - r, modulus);
        double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(modulus);
        std::complex<double> phi = 1.0 - std::complex<double>(std::cos(angle), std::sin(angle));
        if (std::abs(phi) >= 1e-9) { numeric = false; break; }
    }

    if (numeric != algebraic)
        throw std::logic_error("common-zero characterization disagrees with direct evaluation");
    return algebraic;
}

MomentResult restricted_moment(const NumericalSemigroup& s, const LengthDistribution& dist,
                               unsigned power, std::int64_t modulus, std::int64_t residue) {
    check_residue(residue, modulus);
    MomentResult r;
    r.power = power;
    r.modulus = modulus;
    r.residue = residue;
    r.element = dist.element();
    r.exact = 0;
    for (const auto& [len, mult] : dist.counts()) {
        if (mod_reduce(len, modulus) != residue) continue;
        r.exact += pow_big(BigInt(static_cast<long>(len)), power) * mult;
    }
    r.attainable = attainable(s, modulus, residue, dist.element());
    r.leading = leading_term(s, power, modulus, residue, dist.element());
    r.residual = Rational(r.exact) - r.leading;
    return r;
}

MomentResult restricted_moment(const NumericalSemigroup& s, std::int64_t n, unsigned power,
                               std::int64_t modulus, std::int64_t residue) {
    return restricted_moment(s, length_distribution(s, n), power, modulus, residue);
}

BigInt unrestricted_moment(const LengthDistribution& dist, unsigned power) {
    BigInt sum = 0;
    for (const auto& [len, mult] : dist.counts())
        sum += pow_big(BigInt(static_cast<long>(len)), power) * mult;
    return sum;
}

Rational ResidueHistogram::proportion(std::int64_t residue) const {
    if (residue < 0 || residue >= modulus)
        throw std::invalid_argument("residue must lie in 0..modulus-1");
    if (total == 0) throw std::logic_error("proportions undefined for empty multiset");
    return make_rational(counts[static_cast<std::size_t>(residue)], total);
}

ResidueHistogram residue_histogram(const NumericalSemigroup& s, const LengthDistribution& dist,
                                   std::int64_t modulus) {
    check_modulus(modulus);
    ResidueHistogram h;
    h.element = dist.element();
    h.modulus = modulus;
    h.counts.assign(static_cast<std::size_t>(modulus), BigInt(0));
    for (const auto& [len, mult] : dist.counts())
        h.counts[static_cast<std::size_t>(mod_reduce(len, modulus))] += mult;
    h.total = dist.total();
    // zero case: unattainable classes carry nothing
    for (std::int64_t i = 0; i < modulus; ++i)
        if (!attainable(s, modulus, i, dist.element()) &&
            h.counts[static_cast<std::size_t>(i)] != 0)
            throw std::logic_error("lengths found in an unattainable residue class");
    return h;
}

ResidueHistogram residue_histogram(const NumericalSemigroup& s, std::int64_t n,
                                   std::int64_t modulus) {
    return residue_histogram(s, length_distribution(s, n), modulus);
}

}  // namespace lendist
