#pragma once

#include <gmpxx.h>

#include <string>

namespace knapsack {

using BigInt = mpz_class;
using Rational = mpq_class;

/// n! for n >= 0. Throws std::invalid_argument for negative n.
BigInt factorial(long n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

std::string to_decimal(const BigInt& value);
std::string to_decimal(const Rational& value);

}  // namespace knapsack
