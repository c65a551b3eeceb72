#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "potb/catalog.hpp"

#ifndef POTB_CLI_PATH
#define POTB_CLI_PATH "potb"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(POTB_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

int count_lines_with(const std::string& text, const std::string& needle) {
    int count = 0;
    size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("expand writes the expanded plan") {
    SUBCASE("catalog plan to stdout") {
        RunResult r = run_cli("expand --plan P3 --subspace 100");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("s=3 m=3 b=6 k=4\n") == 0);
        CHECK(count_lines_with(r.out, "block:") == 6);
    }
    SUBCASE("plan file to output file") {
        std::string plan_file = "cli_test_plan.txt";
        std::string out_file = "cli_test_out.txt";
        std::ofstream(plan_file) << potb::serialize_plan(potb::catalog("P").plan);
        RunResult r = run_cli("expand --plan " + plan_file + " --subspace '0102;1010' --out " +
                              out_file);
        CHECK(r.exit_code == 0);
        std::ifstream in(out_file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(text.find("s=3 m=4 b=18 k=4\n") == 0);
        std::remove(plan_file.c_str());
        std::remove(out_file.c_str());
    }
    SUBCASE("malformed subspace exits 2") {
        CHECK(run_cli("expand --plan P --subspace '01;1'").exit_code == 2);
    }
    SUBCASE("missing plan exits 2") {
        CHECK(run_cli("expand --plan NOPE --subspace 100").exit_code == 2);
    }
}

TEST_CASE("check prints the pair relation") {
    CHECK(run_cli("check --plan P A C").out == "A\tC\tOTB\n");
    CHECK(run_cli("check --plan P A B^2C^2").out == "A\tB^2C^2\tAliased\n");
    CHECK(run_cli("check --plan P A B").out == "A\tB\tNonOrthogonal\n");
    CHECK(run_cli("check --plan P A Z").exit_code == 2);
}

TEST_CASE("report emits the TSV sections") {
    RunResult r = run_cli("report --plan P3 --model mains+2fi");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# pair-relations\n") != std::string::npos);
    CHECK(r.out.find("# block-relations\n") != std::string::npos);
    CHECK(r.out.find("# estimability\n") != std::string::npos);
    CHECK(r.out.find("estimable=") != std::string::npos);
    SUBCASE("deterministic output") {
        CHECK(run_cli("report --plan P3 --model mains+2fi").out == r.out);
    }
}

TEST_CASE("search prints a ranked table") {
    RunResult r = run_cli("search --plan P3 --t 1 --limit 13");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# rank\tsubspace\tblocks\testimable") == 0);
    CHECK(count_lines_with(r.out, "\n") == 14); // header + 13 rows
    CHECK(run_cli("search --plan P3 --t 7").exit_code == 2);
}

TEST_CASE("verify-paper runs clean") {
    RunResult r = run_cli("verify-paper");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL\t") == std::string::npos);
    CHECK(r.out.find("DISCREPANCY-DOCUMENTED") != std::string::npos);
    CHECK(r.out.find("# summary") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("report --plan P --model nonsense").exit_code == 2);
}

} // TEST_SUITE
