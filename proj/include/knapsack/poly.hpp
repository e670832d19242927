#pragma once

#include "knapsack/bigint.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace knapsack {

/// Polynomial with integer coefficients over a fixed number of variables.
/// Terms are kept in an ordered map keyed by exponent vector; zero
/// coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const BigInt& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);
    /// sum_i coeffs[i] * x_i + c
    static MultiPoly linear(std::span<const long> coeffs, long c);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;

    /// gcd of all coefficients (0 for the zero polynomial).
    BigInt content() const;
    /// Coefficient of the greatest term in the map order.
    BigInt leading_coefficient() const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const BigInt& scalar);
    /// Exact division of every coefficient; throws if any is not divisible.
    MultiPoly& divide_exact(const BigInt& scalar);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const BigInt& s) { return a *= s; }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    Rational evaluate(std::span<const Rational> point) const;
    BigInt evaluate(std::span<const BigInt> point) const;

    /// Replaces variable `index` by `replacement` (same variable count).
    MultiPoly substitute(std::size_t index, const MultiPoly& replacement) const;

    /// Human-readable form, e.g. "3*k^2*m - m + 1"; "0" for zero.
    std::string to_string(std::span<const std::string> names) const;

private:
    void add_term(const Exponents& e, const BigInt& c);

    std::size_t nvars_;
    std::map<Exponents, BigInt> terms_;
};

MultiPoly pow(const MultiPoly& base, int exponent);

/// numerator / denominator, normalized so the integer content is pulled out
/// of both and the denominator's leading coefficient is positive.
class RationalFunction {
public:
    explicit RationalFunction(std::size_t nvars = 0);
    RationalFunction(MultiPoly numerator, MultiPoly denominator);
    static RationalFunction from_poly(MultiPoly p);
    static RationalFunction constant(std::size_t nvars, const BigInt& c);

    const MultiPoly& numerator() const noexcept { return num_; }
    const MultiPoly& denominator() const noexcept { return den_; }
    std::size_t nvars() const noexcept { return num_.nvars(); }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFunction& operator+=(const RationalFunction& other);
    RationalFunction& operator-=(const RationalFunction& other);
    RationalFunction& operator*=(const RationalFunction& other);
    RationalFunction& operator/=(const RationalFunction& other);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;

    /// Equality by cross-multiplication.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    /// Throws std::domain_error when the denominator vanishes at the point.
    Rational evaluate(std::span<const Rational> point) const;
    RationalFunction substitute(std::size_t index, const MultiPoly& replacement) const;

    std::string to_string(std::span<const std::string> names) const;

private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

/// a.num * b.den - b.num * a.den; identically zero iff a == b.
MultiPoly cross_difference(const RationalFunction& a, const RationalFunction& b);

}  // namespace knapsack
