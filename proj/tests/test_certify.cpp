#include "knapsack/certify.hpp"
#include "knapsack/degree.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace knapsack;

namespace {

BigInt f(std::initializer_list<int> parts) { return degree(make_partition(parts)); }

BigInt hook(int a, int b, int t) { return degree(*fat_hook(a, b, t)); }

BigInt hook_or_zero(int a, int b, int t)
{
    auto p = fat_hook(a, b, t);
    return p ? degree(*p) : BigInt(0);
}

}  // namespace

TEST_CASE("every certificate passes with a zero difference")
{
    for (const Certificate& c : certify_all()) {
        INFO(c.id);
        CHECK(c.symbolic_pass());
        CHECK(c.pass());
        CHECK(c.difference_text() == "0");
        CHECK(!c.checks.empty());
        CHECK(!c.spot_checks.empty());
    }
    CHECK(certify_all().size() == 5);
}

TEST_CASE("certificates by id")
{
    for (const char* id : {"lem2.3", "prop2.4", "lem4.3", "h-swap", "s-symmetry"}) {
        CHECK(certify_by_id(id).id == id);
    }
    CHECK_THROWS_AS(certify_by_id("nope"), std::invalid_argument);
}

TEST_CASE("three-window spot values")
{
    const Certificate c = certify_three_window();
    bool saw_14_7 = false;
    for (const auto& s : c.spot_checks) {
        CHECK(s.holds());
        for (const auto& [name, value] : s.params) {
            saw_14_7 = saw_14_7 || (name == "k" && value == 14);
        }
    }
    CHECK(saw_14_7);
    // the n = 35 instances by direct evaluation
    CHECK(hook(14, 14, 7) + hook(15, 15, 5) + hook(16, 16, 3) - hook(16, 14, 5) == f({14, 14, 7}));
    CHECK(hook(11, 11, 13) + hook(12, 12, 11) + hook(13, 13, 9) == hook(13, 11, 11));
}

TEST_CASE("boundary pair spot values")
{
    CHECK(f({3, 3, 1, 1}) + f({4, 4}) == f({4, 3, 1}));
    CHECK(f({3, 3, 1, 1}) == 56);
    CHECK(f({4, 3, 1}) == 70);
    CHECK(hook(9, 8, 6) == hook(8, 8, 7) + hook(9, 9, 5));
    for (const auto& s : certify_boundary_pair().spot_checks) {
        CHECK(s.holds());
    }
}

TEST_CASE("four-term relation holds numerically on random points")
{
    // k >= m >= 4, l >= k+2
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(0, 14);
    int tested = 0;
    while (tested < 50) {
        const int m = pick(rng);
        const int k = m + pick(rng) / 2;
        const int l = k + 2 + pick(rng) / 2;
        if (k < 1 || m < 4) {
            continue;
        }
        const BigInt lhs = degree(*three_part(l, k, m));
        const BigInt rhs = hook(l, k, m) - hook(l, k + 2, m - 2) - hook(l + 2, k, m - 2) + hook(l + 2, k + 2, m - 4);
        REQUIRE(lhs == rhs);
        ++tested;
    }
    CHECK(f({6, 4, 4}) == hook(6, 4, 4) - hook(6, 6, 2) - hook(8, 4, 2) + hook(8, 6, 0));
}

TEST_CASE("three-window identity holds numerically on random points")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(2, 30);
    for (int i = 0; i < 50; ++i) {
        const int k = pick(rng);
        const int m = pick(rng) + 2;
        const BigInt window = hook(k, k, m) + hook(k + 1, k + 1, m - 2) + hook_or_zero(k + 2, k + 2, m - 4);
        BigInt expected = hook(k + 2, k, m - 2);
        if (k >= m) {
            expected += degree(*three_part(k, k, m));
        } else if (m >= k + 3) {
            expected += degree(*three_part(m - 2, k + 1, k + 1));
        }
        REQUIRE(window == expected);
    }
}

TEST_CASE("h symmetry spot values")
{
    CHECK(h_analytic(2, 2, 2).value() == h_analytic(0, 3, 3).value());
    // k = 2, m = 10, r = 1, j = 0
    CHECK(h_analytic(4, 2, 8).value() == h_analytic(6, 5, 3).value());
    CHECK(h_analytic(4, 8, 8).value() + h_analytic(6, 8, 6).value() == 0);
    for (const auto& s : certify_s_symmetry().spot_checks) {
        CHECK(s.holds());
    }
    for (const auto& s : certify_h_swap().spot_checks) {
        CHECK(s.holds());
    }
}
