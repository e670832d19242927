#include "knapsack/degree.hpp"
#include "knapsack/identities.hpp"
#include "knapsack/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace knapsack;

namespace {

bool contains_pair(const SearchResult& result, std::vector<Partition> left, std::vector<Partition> right)
{
    std::sort(left.begin(), left.end(), std::greater<>());
    std::sort(right.begin(), right.end(), std::greater<>());
    for (const auto& f : result.identities) {
        auto l = f.left;
        auto r = f.right;
        std::sort(l.begin(), l.end(), std::greater<>());
        std::sort(r.begin(), r.end(), std::greater<>());
        if ((l == left && r == right) || (l == right && r == left)) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("pool construction")
{
    const SearchPool pool = make_pool(4, "3part+fathook");
    std::set<Partition> shapes;
    for (const auto& c : pool.candidates) {
        CHECK(shapes.insert(c.shape).second);
        CHECK(c.degree == degree(c.shape));
    }
    CHECK(shapes.count(make_partition({1, 1, 1, 1})) == 1);
    CHECK(shapes.count(make_partition({2, 1, 1})) == 1);
    CHECK(std::is_sorted(pool.candidates.begin(), pool.candidates.end(),
                         [](const PoolEntry& a, const PoolEntry& b) { return a.shape > b.shape; }));
    CHECK_THROWS_AS(make_pool(4, "bogus"), std::invalid_argument);
}

TEST_CASE("n = 4 rediscovers the k = 1 identity")
{
    const SearchResult result = find_equal_sum_pairs(make_pool(4, "3part+fathook"));
    CHECK(!result.truncated);
    CHECK(contains_pair(result, {make_partition({2, 1, 1})}, {make_partition({1, 1, 1, 1}), make_partition({2, 2})}));
    bool labelled = false;
    for (const auto& f : result.identities) {
        labelled = labelled || f.rediscovery == "Thm1.4-eq1 n=4 k=1";
    }
    CHECK(labelled);
}

TEST_CASE("conjugate singletons")
{
    const SearchPool pool = pool_from_shapes({make_partition({6}), make_partition({1, 1, 1, 1, 1, 1})});
    const SearchResult result = find_equal_sum_pairs(pool);
    REQUIRE(result.identities.size() == 1);
    CHECK(result.identities[0].total_terms() == 2);
}

TEST_CASE("emitted identities are disjoint, nonempty, exact and ranked")
{
    const SearchResult result = find_equal_sum_pairs(make_pool(12, "3part+fathook"));
    CHECK(!result.truncated);
    REQUIRE(!result.identities.empty());
    for (std::size_t i = 0; i < result.identities.size(); ++i) {
        const auto& f = result.identities[i];
        REQUIRE(!f.left.empty());
        REQUIRE(!f.right.empty());
        REQUIRE(f.left.size() >= f.right.size());
        const auto r = verify_knapsack_sets(f.left, f.right);
        REQUIRE(r.pass);
        REQUIRE(r.lhs == f.sum);
        if (i > 0) {
            const auto& prev = result.identities[i - 1];
            REQUIRE((prev.total_terms() < f.total_terms() ||
                     (prev.total_terms() == f.total_terms() && prev.max_degree <= f.max_degree)));
        }
    }
}

TEST_CASE("equal-parity plus kk1 pool at n = 20 contains the second-part identities")
{
    const SearchResult result = find_equal_sum_pairs(make_pool(20, "parity3+kk1"));
    CHECK(!result.truncated);
    for (int k = 2; k <= 8; k += 2) {
        std::vector<Partition> right{*fat_hook(k, k, 20 - 2 * k), *fat_hook(k + 1, k + 1, 18 - 2 * k)};
        CHECK(contains_pair(result, x_set(20, k, XSetClass::Class1), right));
    }
}

TEST_CASE("caps and truncation")
{
    SearchLimits tight;
    tight.max_evaluations = 50;
    const SearchResult result = find_equal_sum_pairs(make_pool(12, "3part+fathook"), tight);
    CHECK(result.truncated);
    CHECK(result.evaluations <= 50);

    SearchLimits few;
    few.max_results = 1;
    CHECK(find_equal_sum_pairs(make_pool(12, "3part+fathook"), few).truncated);

    SearchLimits bad;
    bad.max_left = 1;
    bad.max_right = 2;
    CHECK_THROWS_AS(find_equal_sum_pairs(make_pool(6, "3part"), bad), std::invalid_argument);
    CHECK_THROWS_AS(find_equal_sum_pairs(SearchPool{}), std::invalid_argument);
}

TEST_CASE("even window scan")
{
    const auto rows = scan_even_L(4, 7, 2);
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0].d == 0);
    CHECK(rows[0].value == 0);
    CHECK(rows[0].match == "empty sum");
    const BigInt expected = degree(*fat_hook(4, 4, 7)) + degree(*fat_hook(5, 5, 5));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].value == expected);
        CHECK(rows[i].residual == rows[i].value - rows[i].probe_value);
    }
    const auto same = scan_even_L(5, 5, 2);
    CHECK(same.back().match.size() > 0);
    const std::string csv = even_window_csv(rows);
    CHECK(csv.rfind("k,m,d,L_d,probe,probe_value,residual,match\n", 0) == 0);
    CHECK_THROWS(scan_even_L(1, 5, 2));
}
