#pragma once

#include "knapsack/bigint.hpp"
#include "knapsack/partition.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knapsack {

/// f^lambda by the hook length formula, memoized. The cache is shared and
/// guarded, so concurrent callers see the same values as uncached calls.
BigInt degree(const Partition& lambda);
BigInt degree_uncached(const Partition& lambda);

void set_degree_cache_enabled(bool enabled);
bool degree_cache_enabled();
void clear_degree_cache();
std::size_t degree_cache_size();

/// Closed form for (a, b, 1^t); requires a >= b >= 1, t >= 0.
BigInt degree_fathook(int a, int b, int t);
/// Closed form for (r, s, t); requires r >= s >= t >= 0.
BigInt degree_threepart(int r, int s, int t);

inline constexpr int kDefaultSytBound = 14;

/// Counts standard Young tableaux by backtracking over fillings.
/// Throws std::invalid_argument when |lambda| exceeds max_size.
BigInt syt_enumerate(const Partition& lambda, int max_size = kDefaultSytBound);

/// Exact value of an analytic degree extension at integer arguments.
class AnalyticValue {
public:
    AnalyticValue() = default;
    explicit AnalyticValue(Rational value);

    const Rational& value() const noexcept { return value_; }
    bool is_integer() const;
    /// Throws std::logic_error when the value is not integral.
    BigInt to_integer() const;
    std::string to_string() const { return to_decimal(value_); }

    friend bool operator==(const AnalyticValue& a, const AnalyticValue& b) { return a.value_ == b.value_; }

private:
    Rational value_{0};
};

/// Raised for arguments where the analytic extension is not evaluated:
/// negative total (a pole of the leading factorial) or a vanishing linear
/// denominator.
class AnalyticDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (x+y+z)! / ((x+2)! (y+1)! z!) * (x-y+1)(x-z+2)(y-z+1), with 1/j! = 0 for j < 0.
/// Agrees with degree((x, y, z)) on partitions.
AnalyticValue h_analytic(long x, long y, long z);

/// (x+y+r)! / (x! (y-1)! r!) * (x-y+1) / ((x+r+1)(y+r)), with 1/j! = 0 for j < 0.
/// Agrees with degree((x, y, 1^r)) on partitions.
AnalyticValue h1_analytic(long x, long y, long r);

}  // namespace knapsack
