#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace expmath {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Integer factorial(long n);
Integer binomial(long n, long k);
Integer multinomial(const std::vector<long>& parts);
Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, long e);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Divisors of |n| (positive only), ascending. n must be nonzero.
std::vector<Integer> positive_divisors(const Integer& n, std::size_t cap = 100000);

double to_double(const Rational& q);
// log10 of |q|, usable for values far outside double range.
double log10_abs(const Rational& q);

}  // namespace expmath
