#include "knapsack/bigint.hpp"

#include <stdexcept>

namespace knapsack {

BigInt factorial(long n)
{
    if (n < 0) {
        throw std::invalid_argument("factorial of negative integer " + std::to_string(n));
    }
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

BigInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

std::string to_decimal(const BigInt& value)
{
    return value.get_str(10);
}

std::string to_decimal(const Rational& value)
{
    return value.get_str(10);
}

}  // namespace knapsack
