#include "knapsack/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace knapsack {

std::optional<Partition> try_make_partition(std::span<const int> parts)
{
    std::size_t end = parts.size();
    while (end > 0 && parts[end - 1] == 0) {
        --end;
    }
    Partition result;
    for (std::size_t i = 0; i < end; ++i) {
        if (parts[i] <= 0) {
            return std::nullopt;
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            return std::nullopt;
        }
        result.parts_.push_back(parts[i]);
        result.size_ += parts[i];
    }
    return result;
}

Partition make_partition(std::span<const int> parts)
{
    for (int p : parts) {
        if (p < 0) {
            throw std::invalid_argument("partition has a negative part");
        }
    }
    auto result = try_make_partition(parts);
    if (!result) {
        throw std::invalid_argument("partition parts are not weakly decreasing");
    }
    return *std::move(result);
}

Partition make_partition(std::initializer_list<int> parts)
{
    return make_partition(std::span<const int>(parts.begin(), parts.size()));
}

std::vector<int> Partition::padded(int min_parts) const
{
    std::vector<int> out = parts_;
    while (static_cast<int>(out.size()) < min_parts) {
        out.push_back(0);
    }
    return out;
}

std::string Partition::to_string(int min_parts) const
{
    const std::vector<int> shown = padded(min_parts);
    std::string out;
    std::size_t i = 0;
    while (i < shown.size()) {
        if (!out.empty()) {
            out += ',';
        }
        if (shown[i] == 1) {
            std::size_t run = 0;
            while (i + run < shown.size() && shown[i + run] == 1) {
                ++run;
            }
            out += run >= 2 ? "1^" + std::to_string(run) : "1";
            i += run;
        } else {
            out += std::to_string(shown[i]);
            ++i;
        }
    }
    return out;
}

namespace {

int parse_int(std::string_view token, std::string_view whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw std::invalid_argument("malformed shape '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Partition parse_shape(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        std::string_view token = text.substr(pos, comma - pos);
        std::size_t caret = token.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(parse_int(token, text));
        } else {
            int value = parse_int(token.substr(0, caret), text);
            int repeat = parse_int(token.substr(caret + 1), text);
            if (repeat < 0) {
                throw std::invalid_argument("negative repetition in shape '" + std::string(text) + "'");
            }
            parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);
        }
        pos = comma + 1;
        if (comma == text.size() - 1) {
            throw std::invalid_argument("trailing comma in shape '" + std::string(text) + "'");
        }
    }
    return make_partition(parts);
}

std::optional<Partition> fat_hook(int a, int b, int t)
{
    if (t < 0 || (b == 0 && t > 0)) {
        return std::nullopt;
    }
    std::vector<int> parts{a, b};
    parts.insert(parts.end(), static_cast<std::size_t>(t), 1);
    return try_make_partition(parts);
}

std::optional<Partition> three_part(int a, int b, int c)
{
    const int parts[] = {a, b, c};
    return try_make_partition(parts);
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts()) {
        for (int j = 0; j < part; ++j) {
            ++out[static_cast<std::size_t>(j)];
        }
    }
    return make_partition(out);
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda)
{
    const Partition columns = conjugate(lambda);
    std::vector<std::vector<int>> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.length()));
    for (int i = 0; i < lambda.length(); ++i) {
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(lambda[i]));
        for (int j = 0; j < lambda[i]; ++j) {
            // 0-based form of lambda_i + lambda'_j - i - j + 1
            row.push_back(lambda[i] + columns[j] - i - j - 1);
        }
        hooks.push_back(std::move(row));
    }
    return hooks;
}

int distinct_part_count(const Partition& lambda)
{
    const auto& p = lambda.parts();
    return static_cast<int>(std::set<int>(p.begin(), p.end()).size());
}

std::vector<Partition> branching_children(const Partition& lambda)
{
    std::vector<Partition> children;
    const int rows = lambda.length();
    for (int i = 0; i < rows; ++i) {
        // row i ends in a removable corner iff the next row is strictly shorter
        if (lambda[i] > lambda[i + 1]) {
            std::vector<int> parts = lambda.parts();
            --parts[static_cast<std::size_t>(i)];
            children.push_back(make_partition(parts));
        }
    }
    std::sort(children.begin(), children.end(), std::greater<>());
    return children;
}

bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length()) {
        return false;
    }
    for (int i = 0; i < inner.length(); ++i) {
        if (inner[i] > outer[i]) {
            return false;
        }
    }
    return true;
}

std::vector<SignedPartition> add_rim_hooks(const Partition& mu, int k)
{
    if (k < 1) {
        throw std::invalid_argument("rim hook size must be positive");
    }
    // Beta-numbers on an abacus with enough beads that the hook may run
    // into k fresh rows below mu.
    const int beads = mu.length() + k;
    std::vector<int> beta(static_cast<std::size_t>(beads));
    for (int i = 0; i < beads; ++i) {
        beta[static_cast<std::size_t>(i)] = mu[i] + beads - 1 - i;
    }
    const std::set<int> occupied(beta.begin(), beta.end());

    std::vector<SignedPartition> out;
    for (int i = 0; i < beads; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from + k;
        if (occupied.count(to) != 0) {
            continue;
        }
        const auto jumped = std::distance(occupied.upper_bound(from), occupied.lower_bound(to));
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts(static_cast<std::size_t>(beads));
        for (int r = 0; r < beads; ++r) {
            parts[static_cast<std::size_t>(r)] = moved[static_cast<std::size_t>(r)] - (beads - 1 - r);
        }
        out.push_back({make_partition(parts), jumped % 2 == 0 ? 1 : -1});
    }
    std::sort(out.begin(), out.end(),
              [](const SignedPartition& a, const SignedPartition& b) { return a.partition > b.partition; });
    return out;
}

std::string_view to_string(XSetClass cls)
{
    return cls == XSetClass::Class1 ? "X1" : "X2";
}

XSetClass other(XSetClass cls)
{
    return cls == XSetClass::Class1 ? XSetClass::Class2 : XSetClass::Class1;
}

std::vector<Partition> x_set(int n, int k, XSetClass cls)
{
    std::vector<Partition> out;
    if (k < 0 || n < 0) {
        return out;
    }
    const int want = cls == XSetClass::Class1 ? k % 2 : 1 - k % 2;
    for (int third = 0; third <= k; ++third) {
        const int first = n - k - third;
        if (first < k) {
            break;
        }
        if (third % 2 == want) {
            out.push_back(*three_part(first, k, third));
        }
    }
    return out;
}

namespace {

void generate_partitions(int remaining, int max_part, int parts_left, std::vector<int>& prefix,
                         std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(make_partition(prefix));
        return;
    }
    if (parts_left == 0) {
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // this part and the ones after it hold at most part * parts_left
        if (parts_left > 0 && static_cast<long>(part) * parts_left < remaining) {
            break;
        }
        prefix.push_back(part);
        generate_partitions(remaining - part, part, parts_left < 0 ? -1 : parts_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts, int max_part)
{
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    std::vector<int> prefix;
    generate_partitions(n, max_part < 0 ? n : max_part, max_parts < 0 ? -1 : max_parts, prefix, out);
    return out;
}

std::vector<Partition> hook_family(int n, const HookFamily& family)
{
    struct Visitor {
        int n;
        std::vector<Partition> operator()(const AtMostParts& f) const { return partitions_of(n, f.parts); }
        std::vector<Partition> operator()(const HookBounded& f) const
        {
            std::vector<Partition> out;
            for (auto& p : partitions_of(n)) {
                if (p[f.k] <= f.l) {
                    out.push_back(std::move(p));
                }
            }
            return out;
        }
        std::vector<Partition> operator()(const DoubledTwoHook&) const
        {
            if (n % 2 != 0) {
                throw std::invalid_argument("doubled two-hook family needs even n");
            }
            const int m = n / 2;
            std::vector<Partition> out;
            for (int j = 2; j <= m; ++j) {
                std::vector<int> parts{j, j};
                parts.insert(parts.end(), static_cast<std::size_t>(m - j), 2);
                out.push_back(make_partition(parts));
            }
            std::sort(out.begin(), out.end(), std::greater<>());
            return out;
        }
    };
    return std::visit(Visitor{n}, family);
}

}  // namespace knapsack
