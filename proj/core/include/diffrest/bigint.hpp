#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace diffrest {

using Integer = mpz_class;
using Rational = mpq_class;

// Distinct prime divisors of |n| in increasing order. Requires n != 0.
std::vector<Integer> prime_factors(const Integer& n);

// Product of the distinct primes dividing n; radical(0) = 0, radical(+-1) = 1.
Integer integer_radical(const Integer& n);

bool is_integral(const Rational& q);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

}  // namespace diffrest
