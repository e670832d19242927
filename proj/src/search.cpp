#include "knapsack/search.hpp"

#include "knapsack/degree.hpp"
#include "knapsack/identities.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace knapsack {

namespace {

std::vector<std::string> split_plus(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, '+')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<Partition> family_members(int n, const std::string& family)
{
    std::vector<Partition> out;
    if (family == "3part") {
        return partitions_of(n, 3);
    }
    if (family == "all") {
        return partitions_of(n);
    }
    if (family == "parity3") {
        for (const auto& p : partitions_of(n, 3)) {
            const auto v = p.padded(3);
            if (v[0] % 2 == v[1] % 2 && v[1] % 2 == v[2] % 2) {
                out.push_back(p);
            }
        }
        return out;
    }
    if (family == "kk1") {
        for (int k = 1; 2 * k <= n; ++k) {
            out.push_back(*fat_hook(k, k, n - 2 * k));
        }
        return out;
    }
    if (family == "fathook") {
        for (int k = 1; 2 * k <= n; ++k) {
            out.push_back(*fat_hook(k, k, n - 2 * k));
            if (auto p = fat_hook(k + 1, k, n - 2 * k - 1)) {
                out.push_back(*p);
            }
        }
        return out;
    }
    throw std::invalid_argument("unknown pool family '" + family + "'");
}

// low 64 bits of a nonnegative integer; sums wrap modulo 2^64
std::uint64_t low_word(const BigInt& v)
{
    std::uint64_t out = 0;
    const std::size_t limbs = mpz_size(v.get_mpz_t());
    for (std::size_t i = 0; i < limbs && i * GMP_NUMB_BITS < 64; ++i) {
        out |= static_cast<std::uint64_t>(mpz_getlimbn(v.get_mpz_t(), static_cast<mp_size_t>(i)))
               << (i * GMP_NUMB_BITS);
    }
    return out;
}

struct Subset {
    std::array<std::uint8_t, 8> index{};
    std::uint8_t size = 0;

    bool operator<(const Subset& o) const
    {
        return std::lexicographical_compare(index.begin(), index.begin() + size, o.index.begin(),
                                            o.index.begin() + o.size);
    }
    bool disjoint(const Subset& o) const
    {
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < o.size; ++j) {
                if (index[i] == o.index[j]) {
                    return false;
                }
            }
        }
        return true;
    }
};

using Key = std::pair<std::vector<Partition>, std::vector<Partition>>;

Key canonical_key(std::vector<Partition> a, std::vector<Partition> b)
{
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    if (b < a) {
        std::swap(a, b);
    }
    return {std::move(a), std::move(b)};
}

// second-part identity instances at n with shared terms cancelled
std::map<Key, std::string> known_instances(int n)
{
    std::map<Key, std::string> out;
    for (int k = 0; 2 * k <= n; ++k) {
        auto [first, second] = verify_second_part_identities(n, k);
        for (const VerificationReport* r : {&first, &second}) {
            std::vector<Partition> left;
            std::vector<Partition> right;
            for (const auto& t : r->terms) {
                std::vector<int> parts(t.args.begin(), t.args.end());
                (t.side == 'L' ? left : right).push_back(make_partition(parts));
            }
            std::vector<Partition> l2;
            std::vector<Partition> r2;
            for (const auto& p : left) {
                if (std::find(right.begin(), right.end(), p) == right.end()) {
                    l2.push_back(p);
                }
            }
            for (const auto& p : right) {
                if (std::find(left.begin(), left.end(), p) == left.end()) {
                    r2.push_back(p);
                }
            }
            if (l2.empty() && r2.empty()) {
                continue;
            }
            out.emplace(canonical_key(l2, r2),
                        r->id + " n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return out;
}

class Searcher {
public:
    Searcher(const SearchPool& pool, const SearchLimits& limits) : pool_(pool), limits_(limits)
    {
        for (const auto& c : pool.candidates) {
            low_.push_back(low_word(c.degree));
        }
    }

    SearchResult run()
    {
        build_table();
        if (!result_.truncated) {
            Subset s;
            walk_left(s, 0, 0);
        }
        return std::move(result_);
    }

private:
    bool spend()
    {
        if (result_.evaluations >= limits_.max_evaluations) {
            result_.truncated = true;
            return false;
        }
        ++result_.evaluations;
        return true;
    }

    void build_table()
    {
        Subset s;
        fill_table(s, 0, 0);
    }

    void fill_table(Subset& s, std::size_t from, std::uint64_t sum)
    {
        if (s.size > 0) {
            if (!spend()) {
                return;
            }
            table_[sum].push_back(s);
        }
        if (s.size == limits_.max_right) {
            return;
        }
        for (std::size_t i = from; i < low_.size() && !result_.truncated; ++i) {
            s.index[s.size++] = static_cast<std::uint8_t>(i);
            fill_table(s, i + 1, sum + low_[i]);
            --s.size;
        }
    }

    void walk_left(Subset& s, std::size_t from, std::uint64_t sum)
    {
        if (s.size > 0) {
            if (!spend()) {
                return;
            }
            if (auto it = table_.find(sum); it != table_.end()) {
                for (const Subset& r : it->second) {
                    if (!spend()) {
                        return;
                    }
                    consider(s, r);
                }
            }
        }
        if (s.size == limits_.max_left) {
            return;
        }
        for (std::size_t i = from; i < low_.size() && !result_.truncated; ++i) {
            s.index[s.size++] = static_cast<std::uint8_t>(i);
            walk_left(s, i + 1, sum + low_[i]);
            --s.size;
        }
    }

    void consider(const Subset& left, const Subset& right)
    {
        if (left.size < right.size || (left.size == right.size && !(left < right)) || !left.disjoint(right)) {
            return;
        }
        BigInt a = 0;
        BigInt b = 0;
        BigInt top = 0;
        for (int i = 0; i < left.size; ++i) {
            const BigInt& v = pool_.candidates[left.index[i]].degree;
            a += v;
            top = std::max(top, v);
        }
        for (int i = 0; i < right.size; ++i) {
            const BigInt& v = pool_.candidates[right.index[i]].degree;
            b += v;
            top = std::max(top, v);
        }
        if (a != b) {
            return;
        }
        if (result_.identities.size() >= limits_.max_results) {
            result_.truncated = true;
            return;
        }
        FoundIdentity found;
        for (int i = 0; i < left.size; ++i) {
            found.left.push_back(pool_.candidates[left.index[i]].shape);
        }
        for (int i = 0; i < right.size; ++i) {
            found.right.push_back(pool_.candidates[right.index[i]].shape);
        }
        found.sum = std::move(a);
        found.max_degree = std::move(top);
        result_.identities.push_back(std::move(found));
    }

    const SearchPool& pool_;
    const SearchLimits& limits_;
    std::vector<std::uint64_t> low_;
    std::unordered_map<std::uint64_t, std::vector<Subset>> table_;
    SearchResult result_;
};

}  // namespace

SearchPool make_pool(int n, const std::string& families)
{
    if (n < 1) {
        throw std::invalid_argument("need n >= 1");
    }
    const std::vector<std::string> names = split_plus(families);
    if (names.empty()) {
        throw std::invalid_argument("empty pool description");
    }
    std::vector<Partition> shapes;
    for (const auto& name : names) {
        auto members = family_members(n, name);
        shapes.insert(shapes.end(), members.begin(), members.end());
    }
    SearchPool pool = pool_from_shapes(std::move(shapes));
    pool.families = names;
    return pool;
}

SearchPool pool_from_shapes(std::vector<Partition> shapes)
{
    std::sort(shapes.begin(), shapes.end(), std::greater<>());
    shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    SearchPool pool;
    for (auto& s : shapes) {
        BigInt d = degree(s);
        pool.candidates.push_back({std::move(s), std::move(d)});
    }
    return pool;
}

SearchResult find_equal_sum_pairs(const SearchPool& pool, const SearchLimits& limits)
{
    if (pool.candidates.empty()) {
        throw std::invalid_argument("empty search pool");
    }
    if (pool.candidates.size() > 255) {
        throw std::invalid_argument("search pool larger than 255 candidates");
    }
    if (limits.max_right < 1 || limits.max_left < limits.max_right || limits.max_left > 8) {
        throw std::invalid_argument("need 1 <= max_right <= max_left <= 8");
    }
    SearchResult result = Searcher(pool, limits).run();

    std::sort(result.identities.begin(), result.identities.end(), [](const FoundIdentity& a, const FoundIdentity& b) {
        if (a.total_terms() != b.total_terms()) {
            return a.total_terms() < b.total_terms();
        }
        if (a.max_degree != b.max_degree) {
            return a.max_degree < b.max_degree;
        }
        if (a.left != b.left) {
            return a.left > b.left;
        }
        return a.right > b.right;
    });

    const int n = pool.candidates.front().shape.size();
    const bool single_size = std::all_of(pool.candidates.begin(), pool.candidates.end(),
                                         [n](const PoolEntry& e) { return e.shape.size() == n; });
    if (single_size && n >= 1) {
        const auto known = known_instances(n);
        for (auto& found : result.identities) {
            if (auto it = known.find(canonical_key(found.left, found.right)); it != known.end()) {
                found.rediscovery = it->second;
            }
        }
    }
    return result;
}

std::vector<EvenWindowRow> scan_even_L(int k, int m, int d_max)
{
    if (k < 2 || m < 2) {
        throw std::invalid_argument("need k, m >= 2");
    }
    const int n = 2 * k + m;
    std::vector<std::pair<BigInt, Partition>> singles;
    for (const auto& p : partitions_of(n, 3)) {
        singles.emplace_back(degree(p), p);
    }

    std::vector<EvenWindowRow> rows;
    for (int d = 0; d <= d_max; d += 2) {
        BigInt value = 0;
        for (int j = 0; j < d; ++j) {
            if (auto p = fat_hook(k + j, k + j, m - 2 * j)) {
                value += degree(*p);
            }
        }
        if (d == 0) {
            rows.push_back({k, m, d, value, "-", 0, value, "empty sum"});
            continue;
        }
        for (auto probe : {fat_hook(k + d - 1, k, m - d + 1), fat_hook(k + d, k, m - d)}) {
            if (!probe) {
                continue;
            }
            EvenWindowRow row{k, m, d, value, "f^(" + probe->to_string() + ")", degree(*probe), 0, ""};
            row.residual = value - row.probe_value;
            if (row.residual == 0) {
                row.match = "exact";
            } else {
                for (const auto& [v, p] : singles) {
                    if (v == row.residual) {
                        row.match += (row.match.empty() ? "" : ";") + ("f^(" + p.to_string() + ")");
                    }
                }
                if (row.match.empty()) {
                    row.match = "no candidate";
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string even_window_csv(const std::vector<EvenWindowRow>& rows)
{
    std::ostringstream out;
    out << "k,m,d,L_d,probe,probe_value,residual,match\n";
    for (const auto& r : rows) {
        out << r.k << ',' << r.m << ',' << r.d << ',' << to_decimal(r.value) << ",\"" << r.probe << "\","
            << to_decimal(r.probe_value) << ',' << to_decimal(r.residual) << ",\"" << r.match << "\"\n";
    }
    return out.str();
}

}  // namespace knapsack
