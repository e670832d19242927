#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace knapsack {

/// An integer partition in canonical form: weakly decreasing positive parts,
/// no trailing zeros. The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Sum of the parts.
    int size() const noexcept { return size_; }
    /// Number of nonzero parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// Part i (0-based); zero past the last stored part.
    int operator[](int i) const noexcept
    {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    /// Comma-separated parts with runs of 1s written as 1^r, padded with
    /// zeros up to min_parts entries, e.g. "5,5,1^10" or "21,11,0".
    std::string to_string(int min_parts = 0) const;
    /// Parts padded with zeros up to min_parts entries.
    std::vector<int> padded(int min_parts) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    friend std::optional<Partition> try_make_partition(std::span<const int> parts);

    std::vector<int> parts_;
    int size_ = 0;
};

/// Validates and canonicalizes (trailing zeros are trimmed).
/// Throws std::invalid_argument on negative entries or increasing order.
Partition make_partition(std::span<const int> parts);
Partition make_partition(std::initializer_list<int> parts);
std::optional<Partition> try_make_partition(std::span<const int> parts);

/// Parses "5,5,1^10" style shapes. An empty string is the empty partition.
Partition parse_shape(std::string_view text);

/// (a, b, 1^t) when that is a partition (b = 0 requires t = 0).
std::optional<Partition> fat_hook(int a, int b, int t);
/// (a, b, c) when that is a partition; zero parts allowed.
std::optional<Partition> three_part(int a, int b, int c);

Partition conjugate(const Partition& lambda);

/// hooks[i][j] = lambda_i + lambda'_j - i - j + 1 (1-based), one row per part.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

int distinct_part_count(const Partition& lambda);

/// Partitions of |lambda| - 1 obtained by removing one corner, sorted
/// lexicographically descending.
std::vector<Partition> branching_children(const Partition& lambda);

/// Cellwise containment of Young diagrams.
bool contains(const Partition& outer, const Partition& inner);

struct SignedPartition {
    Partition partition;
    int sign = 1;

    friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

/// Every way of adding a connected rim k-hook to mu, with sign (-1)^(leg length).
/// Sorted lexicographically descending by partition.
std::vector<SignedPartition> add_rim_hooks(const Partition& mu, int k);

/// Class1: third part has the parity of k. Class2: opposite parity.
enum class XSetClass { Class1, Class2 };

std::string_view to_string(XSetClass cls);
XSetClass other(XSetClass cls);

/// Three-part partitions (l1, k, l3) of n with the class parity condition on
/// l3, sorted by decreasing l1. Zero third parts are included.
std::vector<Partition> x_set(int n, int k, XSetClass cls);

/// All partitions of n with at most max_parts parts, each at most max_part
/// (negative means unbounded), lexicographically descending.
std::vector<Partition> partitions_of(int n, int max_parts = -1, int max_part = -1);

struct AtMostParts {
    int parts;
};
/// H(k, l; n): partitions with lambda_{k+1} <= l.
struct HookBounded {
    int k;
    int l;
};
/// {(j, j, 2^{m-j}) : 2 <= j <= m} for n = 2m.
struct DoubledTwoHook {};

using HookFamily = std::variant<AtMostParts, HookBounded, DoubledTwoHook>;

/// Lexicographically descending. Throws std::invalid_argument for
/// DoubledTwoHook with odd n.
std::vector<Partition> hook_family(int n, const HookFamily& family);

}  // namespace knapsack
