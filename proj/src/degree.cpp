#include "knapsack/degree.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace knapsack {

namespace {

struct DegreeCache {
    std::shared_mutex mutex;
    std::map<std::vector<int>, BigInt> values;
    std::atomic<bool> enabled{true};
};

DegreeCache& cache()
{
    static DegreeCache instance;
    return instance;
}

}  // namespace

BigInt degree_uncached(const Partition& lambda)
{
    BigInt hooks = 1;
    for (const auto& row : hook_lengths(lambda)) {
        for (int h : row) {
            hooks *= h;
        }
    }
    BigInt total = factorial(lambda.size());
    if (!mpz_divisible_p(total.get_mpz_t(), hooks.get_mpz_t())) {
        throw std::logic_error("hook product does not divide n! for " + lambda.to_string());
    }
    BigInt result;
    mpz_divexact(result.get_mpz_t(), total.get_mpz_t(), hooks.get_mpz_t());
    return result;
}

BigInt degree(const Partition& lambda)
{
    DegreeCache& c = cache();
    if (!c.enabled.load(std::memory_order_relaxed)) {
        return degree_uncached(lambda);
    }
    {
        std::shared_lock lock(c.mutex);
        auto it = c.values.find(lambda.parts());
        if (it != c.values.end()) {
            return it->second;
        }
    }
    BigInt value = degree_uncached(lambda);
    std::unique_lock lock(c.mutex);
    c.values.emplace(lambda.parts(), value);
    return value;
}

void set_degree_cache_enabled(bool enabled)
{
    cache().enabled.store(enabled);
}

bool degree_cache_enabled()
{
    return cache().enabled.load();
}

void clear_degree_cache()
{
    std::unique_lock lock(cache().mutex);
    cache().values.clear();
}

std::size_t degree_cache_size()
{
    std::shared_lock lock(cache().mutex);
    return cache().values.size();
}

BigInt degree_fathook(int a, int b, int t)
{
    if (!(a >= b && b >= 1 && t >= 0)) {
        throw std::invalid_argument("degree_fathook requires a >= b >= 1 and t >= 0");
    }
    BigInt numerator = factorial(a + b + t) * (a - b + 1);
    BigInt denominator = BigInt(a + t + 1) * (b + t) * factorial(a) * factorial(b - 1) * factorial(t);
    return numerator / denominator;
}

BigInt degree_threepart(int r, int s, int t)
{
    if (!(r >= s && s >= t && t >= 0)) {
        throw std::invalid_argument("degree_threepart requires r >= s >= t >= 0");
    }
    BigInt numerator = factorial(r + s + t) * (r - s + 1) * (r - t + 2) * (s - t + 1);
    BigInt denominator = factorial(r + 2) * factorial(s + 1) * factorial(t);
    return numerator / denominator;
}

namespace {

// Places the values 1..n one at a time; each value must go to the end of a
// row whose length stays within the row above.
struct SytCounter {
    std::vector<int> shape;
    std::vector<int> filled;
    std::uint64_t count = 0;

    void place(int remaining)
    {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (std::size_t row = 0; row < shape.size(); ++row) {
            if (filled[row] < shape[row] && (row == 0 || filled[row - 1] > filled[row])) {
                ++filled[row];
                place(remaining - 1);
                --filled[row];
            }
        }
    }
};

}  // namespace

BigInt syt_enumerate(const Partition& lambda, int max_size)
{
    if (lambda.size() > max_size) {
        throw std::invalid_argument("syt_enumerate: |lambda| = " + std::to_string(lambda.size()) +
                                    " exceeds bound " + std::to_string(max_size));
    }
    SytCounter counter{lambda.parts(), std::vector<int>(lambda.parts().size(), 0)};
    counter.place(lambda.size());
    BigInt result;
    mpz_import(result.get_mpz_t(), 1, 1, sizeof(counter.count), 0, 0, &counter.count);
    return result;
}

AnalyticValue::AnalyticValue(Rational value) : value_(std::move(value))
{
    value_.canonicalize();
}

bool AnalyticValue::is_integer() const
{
    return value_.get_den() == 1;
}

BigInt AnalyticValue::to_integer() const
{
    if (!is_integer()) {
        throw std::logic_error("analytic value " + to_string() + " is not an integer");
    }
    return value_.get_num();
}

namespace {

// 1/j! with the convention that it vanishes for negative j.
Rational reciprocal_factorial(long j)
{
    if (j < 0) {
        return 0;
    }
    return Rational(BigInt(1), factorial(j));
}

AnalyticValue checked_integral(Rational value, const char* name)
{
    AnalyticValue result(std::move(value));
    if (!result.is_integer()) {
        throw std::logic_error(std::string(name) + " produced non-integral value " + result.to_string());
    }
    return result;
}

}  // namespace

AnalyticValue h_analytic(long x, long y, long z)
{
    const long total = x + y + z;
    if (total < 0) {
        throw AnalyticDomainError("h(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
                                  "): negative total");
    }
    Rational value = Rational(factorial(total)) * reciprocal_factorial(x + 2) * reciprocal_factorial(y + 1) *
                     reciprocal_factorial(z);
    value *= BigInt(x - y + 1) * (x - z + 2) * (y - z + 1);
    return checked_integral(std::move(value), "h");
}

AnalyticValue h1_analytic(long x, long y, long r)
{
    const std::string args = "h1(" + std::to_string(x) + "," + std::to_string(y) + ";" + std::to_string(r) + ")";
    const long total = x + y + r;
    if (total < 0) {
        throw AnalyticDomainError(args + ": negative total");
    }
    if (x + r + 1 == 0 || y + r == 0) {
        throw AnalyticDomainError(args + ": vanishing denominator");
    }
    Rational value = Rational(factorial(total)) * reciprocal_factorial(x) * reciprocal_factorial(y - 1) *
                     reciprocal_factorial(r);
    Rational linear(BigInt(x - y + 1), BigInt(x + r + 1) * (y + r));
    linear.canonicalize();
    value *= linear;
    return checked_integral(std::move(value), "h1");
}

}  // namespace knapsack
