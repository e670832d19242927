#include "knapsack/degree.hpp"
#include "knapsack/paths.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace knapsack;

namespace {

std::vector<std::string> texts(const std::vector<Path>& paths)
{
    std::vector<std::string> out;
    for (const auto& p : paths) {
        out.push_back(p.to_string());
    }
    return out;
}

}  // namespace

TEST_CASE("path counts")
{
    CHECK(count_paths(PathKind::Dyck, 3) == 5);
    CHECK(count_paths(PathKind::Motzkin, 4) == 9);
    CHECK(count_paths(PathKind::Riordan, 4) == 3);
    CHECK(count_paths(PathKind::Riordan, 1) == 0);
    CHECK(count_paths(PathKind::Riordan, 0) == 1);
    CHECK(count_paths(PathKind::Riordan, 20) == 13393689);
}

TEST_CASE("path enumeration")
{
    CHECK(texts(enumerate_paths(PathKind::Riordan, 0)) == std::vector<std::string>{""});
    CHECK(texts(enumerate_paths(PathKind::Motzkin, 2)) == std::vector<std::string>{"FF", "UD"});
    CHECK(texts(enumerate_paths(PathKind::Riordan, 2)) == std::vector<std::string>{"UD"});
    CHECK(texts(enumerate_paths(PathKind::Riordan, 4)) == std::vector<std::string>{"UDUD", "UFFD", "UUDD"});
    CHECK_THROWS(enumerate_paths(PathKind::Motzkin, 17));
}

TEST_CASE("path validity")
{
    CHECK(is_valid_path(PathKind::Motzkin, Path::parse("FUD")));
    CHECK(!is_valid_path(PathKind::Riordan, Path::parse("FUD")));
    CHECK(!is_valid_path(PathKind::Dyck, Path::parse("UFD")));
    CHECK(!is_valid_path(PathKind::Motzkin, Path::parse("DU")));
    CHECK(!is_valid_path(PathKind::Motzkin, Path::parse("UU")));
}

TEST_CASE("dynamic programming agrees with filtering all step words")
{
    // independent oracle: every word over {D,F,U} of the right length
    for (int len = 0; len <= 10; ++len) {
        long motzkin = 0;
        long riordan = 0;
        long dyck = 0;
        long words = 1;
        for (int i = 0; i < len; ++i) {
            words *= 3;
        }
        for (long w = 0; w < words; ++w) {
            long code = w;
            int height = 0;
            bool ok = true;
            bool flat_on_axis = false;
            bool any_flat = false;
            for (int i = 0; i < len && ok; ++i) {
                const int step = static_cast<int>(code % 3) - 1;
                code /= 3;
                if (step == 0) {
                    any_flat = true;
                    flat_on_axis = flat_on_axis || height == 0;
                }
                height += step;
                ok = height >= 0;
            }
            if (ok && height == 0) {
                ++motzkin;
                riordan += flat_on_axis ? 0 : 1;
                dyck += any_flat ? 0 : 1;
            }
        }
        REQUIRE(count_paths(PathKind::Motzkin, len) == motzkin);
        REQUIRE(count_paths(PathKind::Riordan, len) == riordan);
        if (len % 2 == 0) {
            REQUIRE(count_paths(PathKind::Dyck, len / 2) == dyck);
        }
    }
}

TEST_CASE("counts match enumeration up to 14")
{
    for (PathKind kind : {PathKind::Dyck, PathKind::Motzkin, PathKind::Riordan}) {
        for (int n = 0; n <= 14; ++n) {
            if (kind == PathKind::Dyck && n > 8) {
                continue;  // 2n steps
            }
            REQUIRE(count_paths(kind, n) == static_cast<long>(enumerate_paths(kind, n).size()));
        }
    }
}

TEST_CASE("Riordan paths by flats and ups")
{
    CHECK(count_riordan_by_steps(4, 0, 2) == 2);
    CHECK(count_riordan_by_steps(4, 2, 1) == 1);
    CHECK(count_riordan_by_steps(6, 0, 3) == 5);
    CHECK_THROWS_AS(count_riordan_by_steps(5, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_riordan_by_steps(4, 4, 0), std::invalid_argument);
}

TEST_CASE("row-bounded tableau counts")
{
    CHECK(syt_row_bounded_count(4, 3) == 9);
    CHECK(syt_row_bounded_count(4, 4) == 10);
    CHECK(syt_row_bounded_count(0, 1) == 1);
    for (int n = 0; n <= 30; ++n) {
        REQUIRE(syt_row_bounded_count(n, 3) == count_paths(PathKind::Motzkin, n));
    }
    for (int n = 0; n <= 24; ++n) {
        REQUIRE(syt_row_bounded_count(n, 4) == catalan((n + 1) / 2) * catalan((n + 2) / 2));
    }
}

TEST_CASE("Riordan numbers as fat hook sums and as equal-parity sums")
{
    for (int n = 0; n <= 30; ++n) {
        BigInt fat = 0;
        for (int k = 1; 2 * k <= n; ++k) {
            fat += degree(*fat_hook(k, k, n - 2 * k));
        }
        BigInt parity = 0;
        for (const auto& p : partitions_of(n, 3)) {
            const auto v = p.padded(3);
            if (v[0] % 2 == v[1] % 2 && v[1] % 2 == v[2] % 2) {
                parity += degree(p);
            }
        }
        if (n >= 1) {
            REQUIRE(count_paths(PathKind::Riordan, n) == fat);
        }
        if (n >= 2) {
            REQUIRE(count_paths(PathKind::Riordan, n) == parity);
        }
    }
}

TEST_CASE("path kind names")
{
    CHECK(parse_path_kind("Riordan") == PathKind::Riordan);
    CHECK(to_string(PathKind::Dyck) == "dyck");
    CHECK_THROWS(parse_path_kind("schroeder"));
}
