#pragma once

#include <functional>
#include <vector>

#include "lendist/arith.hpp"
#include "lendist/semigroup.hpp"

namespace lendist {

/// The limiting density of length/n: the piecewise-polynomial (B-spline)
///
///   F(x) = (k-1) n_1...n_k / 2 * sum_r |1 - n_r x| (1 - n_r x)^{k-3}
///                                      / prod_{j != r} (n_j - n_r)
///
/// supported on [1/n_k, 1/n_1], defined for k >= 3. Between consecutive
/// breakpoints 1/n_r the sum is a polynomial of degree k-2, so definite
/// integrals are computed exactly in rational arithmetic; pointwise
/// values are also evaluated exactly and converted to double once.
class DensityModel {
public:
    explicit DensityModel(const NumericalSemigroup& s);  // throws for k < 3

    const NumericalSemigroup& semigroup() const { return s_; }
    const Rational& support_lo() const { return breakpoints_.front(); }  // 1/n_k
    const Rational& support_hi() const { return breakpoints_.back(); }   // 1/n_1
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }

    double eval(double x) const;
    Rational eval_exact(const Rational& x) const;

    /// Exact definite integral of F over [a, b] (oriented: swapping the
    /// endpoints negates it).
    Rational integral_exact(const Rational& a, const Rational& b) const;
    double integral(double a, double b) const;

    /// Composite Simpson quadrature of g*F over the support, panels
    /// aligned to the breakpoints. Throws if g returns a non-finite value.
    double weighted_integral(const std::function<double(double)>& g,
                             int subdivisions = 10000) const;

private:
    Rational antiderivative(const Rational& x, const std::vector<int>& signs) const;

    NumericalSemigroup s_;
    std::vector<Rational> breakpoints_;  // ascending: 1/n_k, ..., 1/n_1
    std::vector<Rational> coeff_;        // per generator r: (k-1) prod n / (2 prod_{j!=r}(n_j - n_r))
};

}  // namespace lendist
