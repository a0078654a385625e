#include "lendist/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace lendist {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt pow_big(const BigInt& base, unsigned exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rational(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

std::int64_t gcd_list(const std::vector<std::int64_t>& values) {
    if (values.empty()) throw std::invalid_argument("gcd_list: empty list");
    std::int64_t g = 0;
    for (std::int64_t v : values) {
        if (v <= 0) throw std::invalid_argument("gcd_list: values must be positive");
        g = std::gcd(g, v);
    }
    return g;
}

BigInt lcm_list(const std::vector<std::int64_t>& values) {
    if (values.empty()) throw std::invalid_argument("lcm_list: empty list");
    BigInt l(1);
    for (std::int64_t v : values) {
        if (v <= 0) throw std::invalid_argument("lcm_list: values must be positive");
        BigInt b(static_cast<long>(v));
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_mpz_t());
    }
    return l;
}

Rational h_poly(unsigned p, const std::vector<Rational>& values) {
    if (values.empty()) throw std::invalid_argument("h_poly: empty variable list");
    std::vector<Rational> h(p + 1, Rational(0));
    h[0] = 1;
    for (const Rational& x : values) {
        // ascending d so h[d-1] already includes x, giving the
        // "repeat the new variable" terms of the recurrence
        for (unsigned d = 1; d <= p; ++d) h[d] += x * h[d - 1];
    }
    return h[p];
}

BigInt stirling2(unsigned n, unsigned i) {
    if (i > n) return BigInt(0);
    // row-by-row S(r,c) = c*S(r-1,c) + S(r-1,c-1)
    std::vector<BigInt> row(i + 1, BigInt(0));
    row[0] = 1;  // S(0,0)
    for (unsigned r = 1; r <= n; ++r) {
        unsigned top = std::min(r, i);
        for (unsigned c = top; c >= 1; --c) {
            row[c] = BigInt(static_cast<long>(c)) * row[c] + row[c - 1];
        }
        row[0] = 0;  // S(r,0) = 0 for r >= 1
    }
    return row[i];
}

std::string to_decimal_string(const Rational& q, int digits) {
    if (digits < 0) throw std::invalid_argument("to_decimal_string: negative digit count");
    const bool negative = q < 0;
    BigInt num = abs(q.get_num());
    const BigInt& den = q.get_den();

    BigInt scale = pow_big(BigInt(10), static_cast<unsigned>(digits));
    BigInt scaled = num * scale;
    BigInt quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());

    BigInt twice = rem * 2;
    if (twice > den || (twice == den && mpz_odd_p(quot.get_mpz_t()))) quot += 1;

    std::string body;
    if (digits == 0) {
        body = quot.get_str();
    } else {
        BigInt ipart = quot / scale;
        BigInt fpart = quot % scale;
        std::string frac = fpart.get_str();
        frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
        body = ipart.get_str() + "." + frac;
    }
    if (negative && body.find_first_not_of("0.") != std::string::npos) body.insert(body.begin(), '-');
    return body;
}

}  // namespace lendist
