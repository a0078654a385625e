#include "lendist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "lendist/enumeration.hpp"
#include "lendist/modular.hpp"

namespace lendist {

namespace {

std::string describe(std::int64_t max_n, std::int64_t modulus_max) {
    std::ostringstream os;
    os << "n <= " << max_n << ", N <= " << modulus_max;
    return os.str();
}

// n values checked exhaustively up to a cap, subsampled beyond it.
std::vector<std::int64_t> sample_elements(std::int64_t max_n, std::uint64_t seed,
                                          std::int64_t cap) {
    std::vector<std::int64_t> ns;
    if (max_n <= cap) {
        for (std::int64_t n = 0; n <= max_n; ++n) ns.push_back(n);
        return ns;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(0, max_n);
    for (std::int64_t j = 0; j < cap; ++j) ns.push_back(pick(rng));
    ns.push_back(max_n);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    return ns;
}

SuiteResult oracle_suite(const NumericalSemigroup& s, const VerifyOptions& opt) {
    SuiteResult r{"oracle-equivalence", true, ""};
    const std::int64_t limit = std::min<std::int64_t>(opt.max_n, 200);
    LengthTable table(s, limit);
    for (std::int64_t n = 0; n <= limit; ++n) {
        std::map<std::int64_t, BigInt> hist;
        for (const auto& f : factorizations_bruteforce(s, n)) hist[f.length] += 1;
        if (hist != table.row(n).counts()) {
            r.passed = false;
            r.detail = "mismatch at n = " + std::to_string(n);
            return r;
        }
    }
    r.detail = "dynamic program equals brute force for n <= " + std::to_string(limit);
    return r;
}

SuiteResult gamma_suite(const NumericalSemigroup& s, const VerifyOptions& opt) {
    SuiteResult r{"gamma-order", true, ""};
    for (std::int64_t N = 1; N <= opt.modulus_max; ++N) {
        GammaSubgroup gamma(s, N);  // ctor cross-checks order, cyclicity, alpha
        const std::int64_t m = std::gcd(s.delta(), N);
        if (gamma.order() != m) {
            r.passed = false;
            r.detail = "order mismatch at N = " + std::to_string(N);
            return r;
        }
        for (std::int64_t t : gamma.elements()) {
            for (std::int64_t g : s.generators()) {
                auto mod = [N](std::int64_t a) { return ((a % N) + N) % N; };
                if (mod(static_cast<std::int64_t>((static_cast<__int128>(mod(g)) * t) % N)) !=
                    gamma.alpha(t)) {
                    r.passed = false;
                    r.detail = "alpha differs across generators at N = " + std::to_string(N);
                    return r;
                }
            }
        }
    }
    r.detail = "|Gamma| = gcd(delta, N) and alpha consistent for N <= " +
               std::to_string(opt.modulus_max);
    return r;
}

SuiteResult exponential_suite(const NumericalSemigroup& s, const VerifyOptions& opt) {
    SuiteResult r{"exponential-sum", true, ""};
    for (std::int64_t N = 1; N <= opt.modulus_max; ++N) {
        const std::int64_t period = N * std::max<std::int64_t>(s.delta(), 1);
        for (std::int64_t i = 0; i < N; ++i) {
            for (std::int64_t n = 0; n < period; ++n) {
                const auto closed = static_cast<double>(exponential_sum(s, N, i, n));
                const std::complex<double> direct = exponential_sum_complex(s, N, i, n);
                if (std::abs(direct - std::complex<double>(closed, 0.0)) >= 1e-9) {
                    r.passed = false;
                    std::ostringstream os;
                    os << "closed form differs at N=" << N << " i=" << i << " n=" << n;
                    r.detail = os.str();
                    return r;
                }
            }
        }
    }
    r.detail = "closed form equals complex sum for " + describe(0, opt.modulus_max);
    return r;
}

SuiteResult fourier_suite(const NumericalSemigroup& s, const VerifyOptions& opt) {
    SuiteResult r{"fourier-consistency", true, ""};
    const auto ns = sample_elements(opt.max_n, opt.seed, 400);
    const std::int64_t modulus_max = std::min<std::int64_t>(opt.modulus_max, 12);
    LengthTable table(s, ns.back());
    for (std::int64_t n : ns) {
        const LengthDistribution dist = table.row(n);
        for (unsigned p = 0; p <= 3; ++p) {
            const BigInt whole = unrestricted_moment(dist, p);
            for (std::int64_t N = 1; N <= modulus_max; ++N) {
                BigInt sum = 0;
                for (std::int64_t i = 0; i < N; ++i)
                    sum += restricted_moment(s, dist, p, N, i).exact;
                if (sum != whole) {
                    r.passed = false;
                    std::ostringstream os;
                    os << "restricted moments do not add up at n=" << n << " p=" << p
                       << " N=" << N;
                    r.detail = os.str();
                    return r;
                }
            }
        }
    }
    r.detail = "restricted moments reconstruct totals, p <= 3, " +
               describe(opt.max_n, modulus_max);
    return r;
}

SuiteResult delta_suite(const NumericalSemigroup& s, const VerifyOptions& opt) {
    SuiteResult r{"delta-congruence", true, ""};
    const auto ns = sample_elements(opt.max_n, opt.seed + 1, 1000);
    LengthTable table(s, ns.back());
    const std::int64_t delta = s.delta();
    for (std::int64_t n : ns) {
        const LengthDistribution dist = table.row(n);
        if (dist.empty()) continue;
        const std::int64_t base = dist.min_length() % delta;
        for (const auto& [len, mult] : dist.counts()) {
            (void)mult;
            if (len % delta != base) {
                r.passed = false;
                r.detail = "incongruent lengths at n = " + std::to_string(n);
                return r;
            }
        }
    }
    r.detail = "all lengths of each n agree mod delta = " + std::to_string(delta) +
               ", n <= " + std::to_string(opt.max_n);
    return r;
}

}  // namespace

std::vector<SuiteResult> run_verification(const NumericalSemigroup& s,
                                          const VerifyOptions& options) {
    if (options.max_n < 0 || options.modulus_max < 1)
        throw std::invalid_argument("verification bounds must be positive");
    return {
        oracle_suite(s, options),
        gamma_suite(s, options),
        exponential_suite(s, options),
        fourier_suite(s, options),
        delta_suite(s, options),
    };
}

}  // namespace lendist
