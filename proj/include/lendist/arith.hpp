#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lendist {

// Exact integer count, closed under + and * without overflow.
using BigInt = mpz_class;

// Exact rational, kept canonical: lowest terms, denominator > 0.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

BigInt factorial(unsigned n);
BigInt pow_big(const BigInt& base, unsigned exp);
Rational pow_rational(const Rational& base, unsigned exp);

// gcd/lcm folds over a nonempty list of positive integers.
std::int64_t gcd_list(const std::vector<std::int64_t>& values);
BigInt lcm_list(const std::vector<std::int64_t>& values);

// Complete homogeneous symmetric polynomial h_p(x_1,...,x_k): the sum of
// all degree-p monomials, evaluated at rational points by the column
// recurrence h_p(x_1..x_j) = h_p(x_1..x_{j-1}) + x_j h_{p-1}(x_1..x_j),
// O(k*p) exact operations. h_0 = 1.
Rational h_poly(unsigned p, const std::vector<Rational>& values);

// Stirling number of the second kind: partitions of an n-set into i
// nonempty blocks. Zero when i > n; S(0,0) = 1.
BigInt stirling2(unsigned n, unsigned i);

// Fixed-point decimal rendering with round-half-to-even, e.g.
// to_decimal_string(233/465, 4) == "0.5011". digits >= 0.
std::string to_decimal_string(const Rational& q, int digits);

}  // namespace lendist
