#pragma once

#include "knapsack/bigint.hpp"

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace knapsack {

/// Dyck paths are counted by semilength n (2n steps); Motzkin and Riordan
/// paths by their step count n. Riordan paths are Motzkin paths with no
/// flat step on the axis.
enum class PathKind { Dyck, Motzkin, Riordan };

std::string_view to_string(PathKind kind);
/// Accepts "dyck", "motzkin", "riordan" (case-insensitive).
PathKind parse_path_kind(std::string_view name);

enum class Step : char { Down = 'D', Flat = 'F', Up = 'U' };

struct Path {
    std::vector<Step> steps;

    std::string to_string() const;
    static Path parse(std::string_view text);

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

bool is_valid_path(PathKind kind, const Path& path);

/// Dynamic programming over (position, height).
BigInt count_paths(PathKind kind, int n);

/// Riordan paths of length n with the given numbers of flat and up steps.
/// Requires flats + 2 * ups == n, 0 <= flats < n (so ups >= 1).
BigInt count_riordan_by_steps(int n, int flats, int ups);

inline constexpr int kDefaultPathBound = 16;

/// Visits every valid path in lexicographic order (D < F < U); no bound.
void for_each_path(PathKind kind, int n, const std::function<void(const Path&)>& visit);

/// Collects every valid path in lexicographic order. Throws
/// std::invalid_argument when n exceeds the bound.
std::vector<Path> enumerate_paths(PathKind kind, int n, int bound = kDefaultPathBound);

BigInt catalan(int n);

/// Sum of f^lambda over partitions of n with at most max_rows parts.
BigInt syt_row_bounded_count(int n, int max_rows);

}  // namespace knapsack
