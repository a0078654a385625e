#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lendist/arith.hpp"
#include "lendist/enumeration.hpp"
#include "lendist/semigroup.hpp"

namespace lendist {

/// The subgroup Gamma = { t in Z/NZ : n_1 t = n_2 t = ... = n_k t (mod N) },
/// cyclic of order m = gcd(delta, N) with generator N/m, together with the
/// automorphism alpha(t) = n_j t mod N (the same map for every generator).
/// Construction scans all residues and cross-checks the order, the cyclic
/// structure and the bijectivity of alpha; a mismatch is a logic error.
class GammaSubgroup {
public:
    GammaSubgroup(const NumericalSemigroup& s, std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
    const std::vector<std::int64_t>& elements() const { return elements_; }
    bool contains(std::int64_t t) const;
    std::int64_t alpha(std::int64_t t) const;  // requires contains(t)

private:
    std::int64_t modulus_;
    std::vector<std::int64_t> elements_;  // sorted
    std::vector<std::int64_t> alpha_;     // alpha_[idx] for elements_[idx]
};

GammaSubgroup gamma_subgroup(const NumericalSemigroup& s, std::int64_t modulus);

/// Whether lengths of n can meet residue class i mod N at all:
/// true iff n = i*n_1 (mod m), m = gcd(delta, N). Exactly N/m residues
/// are attainable for any fixed n.
bool attainable(const NumericalSemigroup& s, std::int64_t modulus, std::int64_t residue,
                std::int64_t n);

/// sum_{t in Gamma} zeta^{i*alpha(t) - t*n} for zeta a primitive Nth root
/// of unity, by the integer closed form: m if i*n_1 = n (mod m), else 0.
std::int64_t exponential_sum(const NumericalSemigroup& s, std::int64_t modulus,
                             std::int64_t residue, std::int64_t n);

/// The same sum evaluated in complex arithmetic; cross-check path only.
std::complex<double> exponential_sum_complex(const NumericalSemigroup& s,
                                             std::int64_t modulus, std::int64_t residue,
                                             std::int64_t n);

/// Whether zeta^t is a common zero of 1 - conj(zeta)^r z^{n_j} for all j.
/// Decided by the congruence characterization (r, t in Gamma and
/// alpha(t) = r) and cross-checked against direct complex evaluation at
/// tolerance 1e-9; disagreement is a logic error.
bool common_zero_check(const NumericalSemigroup& s, std::int64_t modulus, std::int64_t r,
                       std::int64_t t);

/// Restricted power sum Lambda^p_{i,N}(n) with its main term.
struct MomentResult {
    unsigned power = 0;
    std::int64_t modulus = 1;
    std::int64_t residue = 0;
    std::int64_t element = 0;
    BigInt exact;        // sum of l^p over lengths l = i (mod N)
    bool attainable = false;
    Rational leading;    // main term, 0 when unattainable
    Rational residual;   // exact - leading
};

MomentResult restricted_moment(const NumericalSemigroup& s, std::int64_t n, unsigned power,
                               std::int64_t modulus, std::int64_t residue);
MomentResult restricted_moment(const NumericalSemigroup& s, const LengthDistribution& dist,
                               unsigned power, std::int64_t modulus, std::int64_t residue);

/// sum of l^p over the whole length multiset.
BigInt unrestricted_moment(const LengthDistribution& dist, unsigned power);

/// Counts of lengths per residue class mod N.
struct ResidueHistogram {
    std::int64_t element = 0;
    std::int64_t modulus = 1;
    std::vector<BigInt> counts;  // size N
    BigInt total;

    bool has_proportions() const { return total != 0; }
    Rational proportion(std::int64_t residue) const;  // requires total != 0
};

ResidueHistogram residue_histogram(const NumericalSemigroup& s, std::int64_t n,
                                   std::int64_t modulus);
ResidueHistogram residue_histogram(const NumericalSemigroup& s, const LengthDistribution& dist,
                                   std::int64_t modulus);

}  // namespace lendist
