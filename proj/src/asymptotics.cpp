#include "lendist/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lendist/modular.hpp"

namespace lendist {

Rational moment_leading_coefficient(const NumericalSemigroup& s, unsigned power,
                                    std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    const unsigned k = static_cast<unsigned>(s.generator_count());
    const std::int64_t m = std::gcd(s.delta(), modulus);
    BigInt num = factorial(power) * BigInt(static_cast<long>(m));
    BigInt den = BigInt(static_cast<long>(modulus)) * factorial(k + power - 1) *
                 s.generator_product();
    return make_rational(num, den) * h_poly(power, s.reciprocal_generators());
}

Rational leading_term(const NumericalSemigroup& s, unsigned power, std::int64_t modulus,
                      std::int64_t residue, std::int64_t n) {
    if (!attainable(s, modulus, residue, n)) return Rational(0);
    const unsigned k = static_cast<unsigned>(s.generator_count());
    return moment_leading_coefficient(s, power, modulus) *
           Rational(pow_big(BigInt(static_cast<long>(n)), k + power - 1));
}

namespace {

DistStats stats_filtered(const LengthDistribution& dist, std::int64_t modulus,
                         std::int64_t residue) {
    DistStats st;
    BigInt total = 0, sum1 = 0, sum2 = 0;
    for (const auto& [len, mult] : dist.counts()) {
        if (((len % modulus) + modulus) % modulus != residue) continue;
        BigInt l(static_cast<long>(len));
        total += mult;
        sum1 += l * mult;
        sum2 += l * l * mult;
    }
    if (total == 0) return st;

    st.empty = false;
    st.total = total;
    st.mean = make_rational(sum1, total);
    st.variance = make_rational(sum2, total) - st.mean * st.mean;

    BigInt cum = 0;
    bool median_set = false;
    BigInt best_mult = 0;
    for (const auto& [len, mult] : dist.counts()) {
        if (((len % modulus) + modulus) % modulus != residue) continue;
        if (!median_set) {
            cum += mult;
            if (2 * cum >= total) {
                st.median = len;
                median_set = true;
            }
        }
        if (mult > best_mult) {
            best_mult = mult;
            st.mode = len;
        }
    }
    return st;
}

}  // namespace

DistStats stats(const LengthDistribution& dist) { return stats_filtered(dist, 1, 0); }

DistStats stats(const LengthDistribution& dist, std::int64_t modulus, std::int64_t residue) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    if (residue < 0 || residue >= modulus)
        throw std::invalid_argument("residue must lie in 0..modulus-1");
    return stats_filtered(dist, modulus, residue);
}

ConvergenceReport equidistribution_check(const NumericalSemigroup& s, std::int64_t modulus,
                                         std::int64_t residue, const Rational& alpha,
                                         const Rational& beta,
                                         const std::vector<std::int64_t>& ns) {
    if (ns.empty()) throw std::invalid_argument("empty n schedule");
    if (residue < 0 || residue >= modulus)
        throw std::invalid_argument("residue must lie in 0..modulus-1");
    for (std::int64_t n : ns)
        if (n < 0) throw std::invalid_argument("element must be nonnegative");

    const DensityModel density(s);
    const std::int64_t m = std::gcd(s.delta(), modulus);
    const double limit_attainable =
        (make_rational(m, modulus) * density.integral_exact(alpha, beta)).get_d();

    const std::int64_t n_max = *std::max_element(ns.begin(), ns.end());
    LengthTable table(s, n_max);

    ConvergenceReport report;
    report.modulus = modulus;
    report.residue = residue;
    report.alpha = alpha;
    report.beta = beta;

    for (std::int64_t n : ns) {
        LengthDistribution dist = table.row(n);
        ConvergencePoint pt;
        pt.n = n;
        if (!dist.empty()) {
            const Rational lo = alpha * Rational(static_cast<long>(n));
            const Rational hi = beta * Rational(static_cast<long>(n));
            BigInt inside = 0;
            for (const auto& [len, mult] : dist.counts()) {
                if (((len % modulus) + modulus) % modulus != residue) continue;
                Rational l(static_cast<long>(len));
                if (l >= lo && l <= hi) inside += mult;
            }
            pt.empirical = make_rational(inside, dist.total()).get_d();
        }
        pt.limit = attainable(s, modulus, residue, n) ? limit_attainable : 0.0;
        pt.gap = std::abs(pt.empirical - pt.limit);
        report.points.push_back(pt);
    }

    const std::size_t half = report.points.size() / 2;
    double first = 0.0, second = 0.0;
    for (std::size_t j = 0; j < report.points.size(); ++j)
        (j < half ? first : second) += report.points[j].gap;
    report.first_half_mean_gap = half ? first / static_cast<double>(half) : 0.0;
    report.second_half_mean_gap =
        report.points.size() > half
            ? second / static_cast<double>(report.points.size() - half)
            : 0.0;
    report.final_gap = report.points.back().gap;
    return report;
}

double riemann_zeta(double s) {
    if (s < 2.0) throw std::invalid_argument("zeta evaluation needs s >= 2");
    constexpr std::int64_t cutoff = 1'000'000;
    double sum = 0.0;
    for (std::int64_t n = cutoff; n >= 1; --n)  // small terms first
        sum += std::pow(static_cast<double>(n), -s);
    const double M = static_cast<double>(cutoff);
    // Euler-Maclaurin tail: integral + half endpoint + first correction
    sum += std::pow(M, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(M, -s) +
           s / 12.0 * std::pow(M, -s - 1.0);
    return sum;
}

double zeta_ratio(unsigned k) {
    if (k < 2) throw std::invalid_argument("zeta ratio needs k >= 2");
    if (k == 2) return 0.0;
    return riemann_zeta(static_cast<double>(k)) / riemann_zeta(static_cast<double>(k - 1));
}

double delta_one_probability_mc(unsigned k, std::int64_t max_generator, std::uint64_t trials,
                                std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("need k >= 2");
    if (max_generator < static_cast<std::int64_t>(k))
        throw std::invalid_argument("need max_generator >= k");
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(1, max_generator);
    std::vector<std::int64_t> tuple(k);

    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::int64_t g;
        do {
            g = 0;
            for (auto& v : tuple) {
                v = pick(rng);
                g = std::gcd(g, v);
            }
        } while (g != 1);
        // delta of the tuple: gcd of all differences against the first entry
        std::int64_t d = 0;
        for (std::size_t j = 1; j < tuple.size(); ++j)
            d = std::gcd(d, std::abs(tuple[j] - tuple[0]));
        if (d == 1) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace lendist
