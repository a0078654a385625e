#include "lendist/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lendist {

DensityModel::DensityModel(const NumericalSemigroup& s) : s_(s) {
    const auto& gens = s_.generators();
    const std::size_t k = gens.size();
    if (k < 3)
        throw std::invalid_argument("density model requires at least three generators");

    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        breakpoints_.push_back(make_rational(1, *it));

    const BigInt scale = BigInt(static_cast<long>(k - 1)) * s_.generator_product();
    for (std::size_t r = 0; r < k; ++r) {
        BigInt denom = 2;
        for (std::size_t j = 0; j < k; ++j)
            if (j != r) denom *= BigInt(static_cast<long>(gens[j] - gens[r]));
        coeff_.push_back(make_rational(scale, denom));
    }
}

Rational DensityModel::eval_exact(const Rational& x) const {
    const auto& gens = s_.generators();
    const unsigned exp = static_cast<unsigned>(gens.size() - 2);
    Rational sum(0);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        Rational u = Rational(1) - Rational(static_cast<long>(gens[r])) * x;
        const int sign = sgn(u);
        if (sign == 0) continue;  // |1 - n_r x| vanishes
        Rational term = coeff_[r] * pow_rational(u, exp);
        sum += sign > 0 ? term : -term;
    }
    return sum;
}

double DensityModel::eval(double x) const {
    if (!std::isfinite(x)) throw std::invalid_argument("density evaluated at non-finite x");
    return eval_exact(Rational(x)).get_d();
}

// Antiderivative of sum_r coeff_r * s_r * (1 - n_r x)^{k-2} for a fixed
// sign pattern: sum_r coeff_r * s_r * -(1 - n_r x)^{k-1} / ((k-1) n_r).
Rational DensityModel::antiderivative(const Rational& x, const std::vector<int>& signs) const {
    const auto& gens = s_.generators();
    const unsigned km1 = static_cast<unsigned>(gens.size() - 1);
    Rational sum(0);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        if (signs[r] == 0) continue;
        Rational u = Rational(1) - Rational(static_cast<long>(gens[r])) * x;
        Rational term = coeff_[r] * pow_rational(u, km1) /
                        Rational(static_cast<long>(km1) * static_cast<long>(gens[r]));
        sum += signs[r] > 0 ? -term : term;
    }
    return sum;
}

Rational DensityModel::integral_exact(const Rational& a, const Rational& b) const {
    if (a == b) return Rational(0);
    if (a > b) return -integral_exact(b, a);

    std::vector<Rational> cuts{a};
    for (const Rational& bp : breakpoints_)
        if (bp > a && bp < b) cuts.push_back(bp);
    cuts.push_back(b);

    const auto& gens = s_.generators();
    Rational total(0);
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        Rational mid = (cuts[p] + cuts[p + 1]) / 2;
        std::vector<int> signs;
        signs.reserve(gens.size());
        for (std::int64_t g : gens)
            signs.push_back(sgn(Rational(1) - Rational(static_cast<long>(g)) * mid));
        total += antiderivative(cuts[p + 1], signs) - antiderivative(cuts[p], signs);
    }
    return total;
}

double DensityModel::integral(double a, double b) const {
    return integral_exact(Rational(a), Rational(b)).get_d();
}

double DensityModel::weighted_integral(const std::function<double(double)>& g,
                                       int subdivisions) const {
    if (subdivisions < 1) throw std::invalid_argument("subdivision count must be positive");
    const double lo = support_lo().get_d();
    const double hi = support_hi().get_d();
    const double span = hi - lo;

    double total = 0.0;
    for (std::size_t p = 0; p + 1 < breakpoints_.size(); ++p) {
        const double a = breakpoints_[p].get_d();
        const double b = breakpoints_[p + 1].get_d();
        long n = std::lround(std::ceil(subdivisions * (b - a) / span));
        n = std::max<long>(2, n + (n % 2));  // even panel count for Simpson
        const double h = (b - a) / static_cast<double>(n);
        double panel = 0.0;
        for (long j = 0; j <= n; ++j) {
            const double x = (j == n) ? b : a + h * static_cast<double>(j);
            const double gx = g(x);
            if (!std::isfinite(gx))
                throw std::domain_error("weighted integrand is not finite at x = " +
                                        std::to_string(x));
            const double w = (j == 0 || j == n) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
            panel += w * gx * eval(x);
        }
        total += panel * h / 3.0;
    }
    return total;
}

}  // namespace lendist
