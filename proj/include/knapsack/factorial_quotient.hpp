#pragma once

#include "knapsack/bigint.hpp"
#include "knapsack/poly.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace knapsack {

/// sum_i coeffs[i] * x_i + offset over a fixed variable list.
class LinearForm {
public:
    explicit LinearForm(std::size_t nvars = 0, long offset = 0) : coeffs_(nvars, 0), offset_(offset) {}
    LinearForm(std::vector<long> coeffs, long offset) : coeffs_(std::move(coeffs)), offset_(offset) {}

    static LinearForm variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const noexcept { return coeffs_.size(); }
    const std::vector<long>& coeffs() const noexcept { return coeffs_; }
    long offset() const noexcept { return offset_; }
    bool is_constant() const;

    LinearForm& operator+=(const LinearForm& other);
    LinearForm& operator-=(const LinearForm& other);
    LinearForm& operator+=(long c)
    {
        offset_ += c;
        return *this;
    }
    LinearForm& operator*=(long c);

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator+(LinearForm a, long c) { return a += c; }
    friend LinearForm operator-(LinearForm a, long c) { return a += -c; }
    friend LinearForm operator*(long c, LinearForm a) { return a *= c; }
    LinearForm operator-() const
    {
        LinearForm out = *this;
        out *= -1;
        return out;
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

    /// Same coefficient vector, i.e. the forms differ by a constant.
    bool parallel_to(const LinearForm& other) const { return coeffs_ == other.coeffs_; }

    MultiPoly to_poly() const;
    long evaluate(std::span<const long> point) const;
    LinearForm substitute(std::size_t index, const LinearForm& replacement) const;
    std::string to_string(std::span<const std::string> names) const;

private:
    std::vector<long> coeffs_;
    long offset_;
};

/// Raised when a ratio leaves factorials that cannot be cancelled into a
/// rational function (their arguments are not shifts of one another).
class IncompatibleFactorials : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A product of factorials of linear forms (each to the power +1 or -1)
/// times a rational function. Factorials whose arguments differ by an
/// integer shift are cancelled into the rational part by reduce().
class FactorialQuotient {
public:
    struct Factor {
        LinearForm argument;
        int power = 1;  // +1 numerator, -1 denominator

        friend bool operator==(const Factor&, const Factor&) = default;
    };

    explicit FactorialQuotient(std::size_t nvars = 0);
    FactorialQuotient(std::vector<Factor> factors, RationalFunction rational);

    std::size_t nvars() const noexcept { return rational_.nvars(); }
    const std::vector<Factor>& factors() const noexcept { return factors_; }
    const RationalFunction& rational_part() const noexcept { return rational_; }

    FactorialQuotient& operator*=(const FactorialQuotient& other);
    friend FactorialQuotient operator*(FactorialQuotient a, const FactorialQuotient& b) { return a *= b; }
    FactorialQuotient inverse() const;

    /// Cancels numerator/denominator factorial pairs with parallel
    /// arguments and folds constant factorials into the rational part.
    FactorialQuotient& reduce();

    FactorialQuotient substitute(std::size_t index, const LinearForm& replacement) const;

    /// Exact value at an integer point, using 1/j! = 0 for negative j in the
    /// denominator. Throws std::domain_error on a negative numerator
    /// factorial or a vanishing rational denominator.
    Rational evaluate(std::span<const long> point) const;

    std::string to_string(std::span<const std::string> names) const;

private:
    std::vector<Factor> factors_;
    RationalFunction rational_;
};

/// The rational function a / b. Throws IncompatibleFactorials when the
/// factorial content of a and b does not match up to integer shifts.
RationalFunction ratio(const FactorialQuotient& a, const FactorialQuotient& b);

/// A shape whose entries are linear forms in the certificate variables.
struct SymbolicShape {
    enum class Family { FatHook, ThreePart };

    Family family;
    LinearForm first;
    LinearForm second;
    /// Tail length t of (a, b, 1^t), or third part of (r, s, t).
    LinearForm third;

    static SymbolicShape fat_hook(LinearForm a, LinearForm b, LinearForm t)
    {
        return {Family::FatHook, std::move(a), std::move(b), std::move(t)};
    }
    static SymbolicShape three_part(LinearForm r, LinearForm s, LinearForm t)
    {
        return {Family::ThreePart, std::move(r), std::move(s), std::move(t)};
    }

    std::string to_string(std::span<const std::string> names) const;
};

/// Closed form of f^shape from the hook length formula:
///   (a, b, 1^t): (a+b+t)! (a-b+1) / ((a+t+1)(b+t) a! (b-1)! t!)
///   (r, s, t):   (r+s+t)! (r-s+1)(r-t+2)(s-t+1) / ((r+2)! (s+1)! t!)
FactorialQuotient closed_form_symbol(const SymbolicShape& shape);

}  // namespace knapsack
