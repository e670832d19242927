#include "knapsack/paths.hpp"

#include "knapsack/degree.hpp"
#include "knapsack/partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace knapsack {

std::string_view to_string(PathKind kind)
{
    switch (kind) {
    case PathKind::Dyck:
        return "dyck";
    case PathKind::Motzkin:
        return "motzkin";
    case PathKind::Riordan:
        return "riordan";
    }
    return "?";
}

PathKind parse_path_kind(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "dyck" || lower == "catalan") {
        return PathKind::Dyck;
    }
    if (lower == "motzkin") {
        return PathKind::Motzkin;
    }
    if (lower == "riordan") {
        return PathKind::Riordan;
    }
    throw std::invalid_argument("unknown path kind '" + std::string(name) + "'");
}

std::string Path::to_string() const
{
    std::string out;
    out.reserve(steps.size());
    for (Step s : steps) {
        out += static_cast<char>(s);
    }
    return out;
}

Path Path::parse(std::string_view text)
{
    Path path;
    for (char c : text) {
        switch (c) {
        case 'U':
            path.steps.push_back(Step::Up);
            break;
        case 'F':
            path.steps.push_back(Step::Flat);
            break;
        case 'D':
            path.steps.push_back(Step::Down);
            break;
        default:
            throw std::invalid_argument("bad path step '" + std::string(1, c) + "'");
        }
    }
    return path;
}

bool is_valid_path(PathKind kind, const Path& path)
{
    int height = 0;
    for (Step s : path.steps) {
        if (s == Step::Flat) {
            if (kind == PathKind::Dyck || (kind == PathKind::Riordan && height == 0)) {
                return false;
            }
        } else {
            height += s == Step::Up ? 1 : -1;
            if (height < 0) {
                return false;
            }
        }
    }
    return height == 0;
}

namespace {

int step_count(PathKind kind, int n)
{
    return kind == PathKind::Dyck ? 2 * n : n;
}

}  // namespace

BigInt count_paths(PathKind kind, int n)
{
    if (n < 0) {
        throw std::invalid_argument("path length must be nonnegative");
    }
    const int steps = step_count(kind, n);
    // ways[h] = number of valid prefixes ending at height h
    std::vector<BigInt> ways(static_cast<std::size_t>(steps + 2), 0);
    ways[0] = 1;
    for (int i = 0; i < steps; ++i) {
        std::vector<BigInt> next(ways.size(), 0);
        const int max_height = std::min(i, steps - i);
        for (int h = 0; h <= max_height; ++h) {
            const BigInt& w = ways[static_cast<std::size_t>(h)];
            if (w == 0) {
                continue;
            }
            next[static_cast<std::size_t>(h + 1)] += w;
            if (h > 0) {
                next[static_cast<std::size_t>(h - 1)] += w;
            }
            const bool flat_allowed =
                kind == PathKind::Motzkin || (kind == PathKind::Riordan && h > 0);
            if (flat_allowed) {
                next[static_cast<std::size_t>(h)] += w;
            }
        }
        ways = std::move(next);
    }
    return ways[0];
}

BigInt count_riordan_by_steps(int n, int flats, int ups)
{
    if (flats < 0 || ups < 0 || flats + 2 * ups != n) {
        throw std::invalid_argument("count_riordan_by_steps requires flats + 2 * ups == n");
    }
    if (flats >= n) {
        throw std::invalid_argument("count_riordan_by_steps requires flats < n");
    }
    // ways[h][f]: prefixes at height h having used f flat steps
    const auto width = static_cast<std::size_t>(flats + 1);
    std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(n + 2), std::vector<BigInt>(width, 0));
    ways[0][0] = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<BigInt>> next(ways.size(), std::vector<BigInt>(width, 0));
        for (int h = 0; h <= std::min(i, n - i); ++h) {
            for (std::size_t f = 0; f < width; ++f) {
                const BigInt& w = ways[static_cast<std::size_t>(h)][f];
                if (w == 0) {
                    continue;
                }
                next[static_cast<std::size_t>(h + 1)][f] += w;
                if (h > 0) {
                    next[static_cast<std::size_t>(h - 1)][f] += w;
                    if (f + 1 < width) {
                        next[static_cast<std::size_t>(h)][f + 1] += w;
                    }
                }
            }
        }
        ways = std::move(next);
    }
    return ways[0][width - 1];
}

namespace {

void extend(PathKind kind, int remaining, int height, Path& path, const std::function<void(const Path&)>& visit)
{
    if (remaining == 0) {
        if (height == 0) {
            visit(path);
        }
        return;
    }
    if (height > remaining) {
        return;
    }
    if (height > 0) {
        path.steps.push_back(Step::Down);
        extend(kind, remaining - 1, height - 1, path, visit);
        path.steps.pop_back();
    }
    if (kind == PathKind::Motzkin || (kind == PathKind::Riordan && height > 0)) {
        path.steps.push_back(Step::Flat);
        extend(kind, remaining - 1, height, path, visit);
        path.steps.pop_back();
    }
    path.steps.push_back(Step::Up);
    extend(kind, remaining - 1, height + 1, path, visit);
    path.steps.pop_back();
}

}  // namespace

void for_each_path(PathKind kind, int n, const std::function<void(const Path&)>& visit)
{
    if (n < 0) {
        throw std::invalid_argument("path length must be nonnegative");
    }
    Path path;
    extend(kind, step_count(kind, n), 0, path, visit);
}

std::vector<Path> enumerate_paths(PathKind kind, int n, int bound)
{
    if (n > bound) {
        throw std::invalid_argument("enumerate_paths: n = " + std::to_string(n) + " exceeds bound " +
                                    std::to_string(bound));
    }
    std::vector<Path> out;
    for_each_path(kind, n, [&](const Path& p) { out.push_back(p); });
    return out;
}

BigInt catalan(int n)
{
    if (n < 0) {
        throw std::invalid_argument("catalan index must be nonnegative");
    }
    return binomial(2L * n, n) / (n + 1);
}

BigInt syt_row_bounded_count(int n, int max_rows)
{
    if (max_rows < 1) {
        throw std::invalid_argument("max_rows must be positive");
    }
    BigInt total = 0;
    for (const Partition& lambda : partitions_of(n, max_rows)) {
        total += degree(lambda);
    }
    return total;
}

}  // namespace knapsack
