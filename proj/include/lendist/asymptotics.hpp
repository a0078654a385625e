#pragma once

#include <cstdint>
#include <vector>

#include "lendist/arith.hpp"
#include "lendist/density.hpp"
#include "lendist/enumeration.hpp"
#include "lendist/semigroup.hpp"

namespace lendist {

/// Coefficient of n^{k+p-1} in the main term of the restricted moment:
/// p! m h_p(1/n_1,...,1/n_k) / (N (k+p-1)! n_1...n_k), m = gcd(delta, N).
Rational moment_leading_coefficient(const NumericalSemigroup& s, unsigned power,
                                    std::int64_t modulus);

/// Main term of Lambda^p_{i,N}(n): coefficient * n^{k+p-1} when the class
/// is attainable for n, else exactly 0.
Rational leading_term(const NumericalSemigroup& s, unsigned power, std::int64_t modulus,
                      std::int64_t residue, std::int64_t n);

/// Summary statistics of a length multiset (or its restriction to a
/// residue class). mean/variance are exact rationals; median is the
/// smallest length whose cumulative count reaches half the total; mode
/// is the smallest length of maximal multiplicity.
struct DistStats {
    bool empty = true;
    BigInt total;
    Rational mean;
    Rational variance;
    std::int64_t median = 0;
    std::int64_t mode = 0;
};

DistStats stats(const LengthDistribution& dist);
DistStats stats(const LengthDistribution& dist, std::int64_t modulus, std::int64_t residue);

struct ConvergencePoint {
    std::int64_t n = 0;
    double empirical = 0.0;  // |{l in L[[n]] : l = i (mod N), l in [an, bn]}| / |L[[n]]|
    double limit = 0.0;      // (m/N) * integral of F over [a, b] when attainable
    double gap = 0.0;
};

struct ConvergenceReport {
    std::int64_t modulus = 1;
    std::int64_t residue = 0;
    Rational alpha;
    Rational beta;
    std::vector<ConvergencePoint> points;
    double first_half_mean_gap = 0.0;
    double second_half_mean_gap = 0.0;
    double final_gap = 0.0;

    bool improving() const { return second_half_mean_gap <= first_half_mean_gap; }
};

/// Empirical restricted-interval proportions against the limit value, one
/// row per n. Requires k >= 3 (the density model). The limit column is
/// per-n: it is 0 whenever the class is unattainable for that n, so the
/// caller should keep the schedule inside one congruence class mod m for
/// a meaningful trend.
ConvergenceReport equidistribution_check(const NumericalSemigroup& s, std::int64_t modulus,
                                         std::int64_t residue, const Rational& alpha,
                                         const Rational& beta,
                                         const std::vector<std::int64_t>& ns);

/// zeta(k)/zeta(k-1): the density of k-generator tuples that are not
/// mutually congruent modulo any prime. Exactly 0 for k = 2 (pole of
/// zeta at 1); absolute error below 1e-10 for k >= 3.
double zeta_ratio(unsigned k);

/// Riemann zeta for real s >= 2 by direct summation with an
/// Euler-Maclaurin tail estimate; absolute error well below 1e-10.
double riemann_zeta(double s);

/// Monte Carlo estimate of the probability that a uniform k-tuple from
/// {1..R}^k with gcd 1 (rejection sampled) has all pairwise differences
/// coprime, i.e. delta = 1. Deterministic for a fixed seed.
double delta_one_probability_mc(unsigned k, std::int64_t max_generator, std::uint64_t trials,
                                std::uint64_t seed);

}  // namespace lendist
