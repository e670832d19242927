#include "knapsack/cli.hpp"
#include "knapsack/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int status = knapsack::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("degree command")
{
    CHECK(run_cli({"degree", "--shape", "3,3"}).out == "5\n");
    CHECK(run_cli({"degree", "--shape", "10,10"}).out == "16796\n");
    const auto all = run_cli({"degree", "--shape", "4,3,1", "--method", "all"});
    CHECK(all.status == 0);
    CHECK(all.out.find("agree") != std::string::npos);
    const auto j = nlohmann::json::parse(run_cli({"degree", "--shape", "5,5,1^10", "--format", "json"}).out);
    CHECK(j.at("shape") == "5,5,1^10");
}

TEST_CASE("paths command")
{
    CHECK(run_cli({"paths", "--kind", "riordan", "--n", "20"}).out == "13393689\n");
    CHECK(run_cli({"paths", "--kind", "dyck", "--n", "3"}).out == "5\n");
    CHECK(run_cli({"paths", "--kind", "riordan", "--n", "4", "--flats", "2", "--ups", "1"}).out == "1\n");
    CHECK(run_cli({"paths", "--kind", "riordan", "--n", "4", "--list"}).out == "3\nUDUD\nUFFD\nUUDD\n");
}

TEST_CASE("verify command")
{
    const auto a = run_cli({"verify", "--id", "thm1.4", "--n", "20", "--k", "2"});
    CHECK(a.status == 0);
    CHECK(a.out.find("f^(18,2,0) + f^(16,2,2) = f^(2,2,1^16) + f^(3,3,1^14)") != std::string::npos);

    const auto b = run_cli({"verify", "--id", "thm1.4", "--n", "32", "--k", "13", "--format", "json"});
    CHECK(b.status == 0);
    const auto j = nlohmann::json::parse(b.out);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("reports").at(0).at("regime").get<std::string>().find("swapped") != std::string::npos);

    const auto c = run_cli({"verify", "--id", "hookwrap", "--mu", "3,1", "--k", "6"});
    CHECK(c.status == 0);
    CHECK(c.out.find("lhs = 0, rhs = 0") != std::string::npos);

    CHECK(run_cli({"verify", "--id", "branch", "--n", "20", "--k", "5", "--class", "2"}).status == 0);
    CHECK(run_cli({"verify", "--id", "regev", "--sweep", "--max-m", "8"}).status == 0);
}

TEST_CASE("json reports carry the shared schema")
{
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"verify", "--id", "thm4.7", "--n", "20", "--k", "8", "--format", "json"},
          std::vector<std::string>{"certify", "--all", "--format", "json"},
          std::vector<std::string>{"search", "--n", "8", "--format", "json"}}) {
        const auto outcome = run_cli(args);
        REQUIRE(outcome.status == 0);
        const auto j = nlohmann::json::parse(outcome.out);
        REQUIRE(j.contains("all_pass"));
        for (const auto& r : j.at("reports")) {
            REQUIRE(r.at("id").is_string());
            REQUIRE(r.at("params").is_object());
            REQUIRE(r.at("lhs").is_string());
            REQUIRE(r.at("rhs").is_string());
            REQUIRE(r.at("pass").is_boolean());
            REQUIRE(r.at("regime").is_string());
            REQUIRE(r.at("terms").is_array());
            for (const auto& t : r.at("terms")) {
                REQUIRE((t.at("side") == "L" || t.at("side") == "R"));
                REQUIRE((t.at("sign") == 1 || t.at("sign") == -1));
                REQUIRE(t.at("shape").is_array());
                REQUIRE(t.at("value").is_string());
            }
        }
    }
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run_cli({}).status == 2);
    CHECK(run_cli({"frobnicate"}).status == 2);
    CHECK(run_cli({"degree", "--shape", "2,3"}).status == 2);
    CHECK(run_cli({"degree", "--bogus"}).status == 2);
    CHECK(run_cli({"verify", "--id", "thm1.4", "--n", "10", "--k", "6"}).status == 2);
    CHECK(run_cli({"verify", "--id", "thm1.4", "--n", "10"}).status == 2);
    CHECK(run_cli({"verify", "--id", "thm1.4", "--sweep", "--max-n", "1000"}).status == 2);
    CHECK(run_cli({"paths", "--kind", "riordan", "--n", "40", "--list"}).status == 2);
    CHECK(run_cli({"certify"}).status == 2);
    CHECK(run_cli({"search", "--n", "8", "--max-left", "1", "--max-right", "2"}).status == 2);
    CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("certify and scan")
{
    const auto c = run_cli({"certify", "--all"});
    CHECK(c.status == 0);
    CHECK(c.out.find("FAIL") == std::string::npos);
    const auto s = run_cli({"scan", "--k", "4", "--m", "7", "--d-max", "2"});
    CHECK(s.status == 0);
    CHECK(s.out.rfind("k,m,d,L_d,", 0) == 0);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args{"search", "--n", "12", "--pool", "3part+fathook", "--format", "json"};
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("--out honours the output directory variable")
{
    const auto dir = std::filesystem::temp_directory_path() / "knapsack-cli-test";
    std::filesystem::remove_all(dir);
    ::setenv("KNAPSACK_OUTPUT_DIR", dir.c_str(), 1);
    const auto outcome = run_cli({"degree", "--shape", "3,3", "--out", "deg.txt"});
    ::unsetenv("KNAPSACK_OUTPUT_DIR");
    CHECK(outcome.status == 0);
    CHECK(outcome.out.empty());
    CHECK(read_file(dir / "deg.txt") == "5\n");
    std::filesystem::remove_all(dir);
}

TEST_CASE("tables match the golden files")
{
    for (const char* id : {"intro-n20", "intro-n32", "lem2.3-n35"}) {
        INFO(id);
        const auto outcome = run_cli({"table", "--id", id});
        CHECK(outcome.status == 0);
        const auto golden = std::filesystem::path(KNAPSACK_GOLDEN_DIR) / (std::string(id) + ".txt");
        REQUIRE(std::filesystem::exists(golden));
        CHECK(outcome.out == read_file(golden));
    }
}
