#pragma once

#include "knapsack/bigint.hpp"
#include "knapsack/partition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knapsack {

struct PoolEntry {
    Partition shape;
    BigInt degree;
};

/// Deduplicated candidates with their degrees, lexicographically descending.
struct SearchPool {
    std::vector<PoolEntry> candidates;
    std::vector<std::string> families;
};

/// Families joined by '+': "3part" (at most three parts), "fathook"
/// ((k,k,1^t) and (k+1,k,1^t)), "parity3" (three parts of equal parity),
/// "kk1" ((k,k,1^(n-2k))), "all". Throws std::invalid_argument on an
/// unknown name.
SearchPool make_pool(int n, const std::string& families);
SearchPool pool_from_shapes(std::vector<Partition> shapes);

struct SearchLimits {
    int max_left = 5;
    int max_right = 2;
    /// Hard cap on enumerated subsets plus candidate pair checks.
    std::uint64_t max_evaluations = 10'000'000;
    std::size_t max_results = 200'000;
};

struct FoundIdentity {
    std::vector<Partition> left;
    std::vector<Partition> right;
    BigInt sum;
    BigInt max_degree;
    /// Name of the known identity this reproduces, empty otherwise.
    std::string rediscovery;

    std::size_t total_terms() const { return left.size() + right.size(); }
};

struct SearchResult {
    std::vector<FoundIdentity> identities;
    bool truncated = false;
    std::uint64_t evaluations = 0;
};

/// Meet-in-the-middle search for disjoint nonempty subsets X, Y of the pool
/// with equal degree sums, |X| <= max_left, |Y| <= max_right. Each pair is
/// reported once with the larger side on the left. Results are ordered by
/// (total terms, largest degree). A pool over one n has second-part
/// identity instances (after cancelling shared terms) labelled.
/// Throws std::invalid_argument for an empty pool, more than 255 candidates
/// or caps outside 1 <= max_right <= max_left <= 8.
SearchResult find_equal_sum_pairs(const SearchPool& pool, const SearchLimits& limits = {});

struct EvenWindowRow {
    int k = 0;
    int m = 0;
    int d = 0;
    BigInt value;
    std::string probe;
    BigInt probe_value;
    BigInt residual;
    std::string match;
};

/// L_d(k,m) for even d <= d_max with the leading fat hooks
/// f^(k+d-1,k,1^(m-d+1)) and f^(k+d,k,1^(m-d)) as probes; the residual is
/// matched against single three-part degrees of 2k+m. Informational only.
std::vector<EvenWindowRow> scan_even_L(int k, int m, int d_max);
std::string even_window_csv(const std::vector<EvenWindowRow>& rows);

}  // namespace knapsack
