#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gallai/constructions.hpp"
#include "gallai/io.hpp"

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(GALLAI_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string run_cli_stdout(const std::string& args, int* exit_code = nullptr) {
    const std::string out_file = "cli_stdout.tmp";
    const std::string cmd =
        std::string(GALLAI_CLI_PATH) + " " + args + " >" + out_file + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    if (exit_code) *exit_code = WEXITSTATUS(rc);
    std::ifstream is(out_file);
    std::stringstream ss;
    ss << is.rdbuf();
    std::remove(out_file.c_str());
    return ss.str();
}

}  // namespace

TEST_CASE("construct equal --n 3 --k 3 emits a verified order-10 file") {
    CHECK(run_cli("construct equal --n 3 --k 3 --out cli_equal.txt") == 0);
    std::ifstream is("cli_equal.txt");
    const auto g = gallai::parse_coloring(is);
    CHECK(g.order() == 10);
    CHECK(run_cli("verify cli_equal.txt --n 3 --m 3") == 0);
    std::remove("cli_equal.txt");
}

TEST_CASE("construct equal --n 4 --k 3 fails with the parity obstruction") {
    CHECK(run_cli("construct equal --n 4 --k 3") == 2);
}

TEST_CASE("construct small-m --n 23 --m 3 --k 3 has order 55") {
    int code = 0;
    const auto text = run_cli_stdout("construct small-m --n 23 --m 3 --k 3", &code);
    CHECK(code == 0);
    const auto g = gallai::parse_coloring(text);
    CHECK(g.order() == 55);
}

TEST_CASE("verify exit codes: pass, refuted, parse error") {
    CHECK(run_cli("construct small-m --n 23 --m 3 --k 3 --out cli_w.txt") == 0);
    CHECK(run_cli("verify cli_w.txt --n 23 --m 3") == 0);

    {
        std::ofstream os("cli_k7.txt");
        gallai::emit_coloring(os, gallai::ColoredComplete(7, 1, 1));
    }
    CHECK(run_cli("verify cli_k7.txt --n 3 --m 2") == 1);

    {
        std::ofstream os("cli_trunc.txt");
        os << "gallai-coloring v1\norder 5 colors 2\n1 1 1 1\n";
    }
    CHECK(run_cli("verify cli_trunc.txt --n 1 --m 1") == 2);
    CHECK(run_cli("verify no_such_file.txt --n 1 --m 1") == 2);

    std::remove("cli_w.txt");
    std::remove("cli_k7.txt");
    std::remove("cli_trunc.txt");
}

TEST_CASE("partition reports 5 parts and palette {2,3} on the pentagon witness") {
    CHECK(run_cli("construct small-m --n 23 --m 3 --k 3 --out cli_p.txt") == 0);
    int code = 0;
    const auto out = run_cli_stdout("partition cli_p.txt --json", &code);
    CHECK(code == 0);
    CHECK(out.find("\"num_parts\": 5") != std::string::npos);
    CHECK(out.find("[\n    2,\n    3\n  ]") != std::string::npos);
    std::remove("cli_p.txt");
}

TEST_CASE("formula gr-equal --n 7 --k 4 prints 24") {
    int code = 0;
    const auto out = run_cli_stdout("formula gr-equal --n 7 --k 4 --json", &code);
    CHECK(code == 0);
    CHECK(out.find("\"value\": 24") != std::string::npos);
    CHECK(run_cli("formula no-such-formula") == 2);
}

TEST_CASE("search threshold --k 2 --pattern 1,1 --mode ramsey --max 6 prints 5") {
    int code = 0;
    const auto out =
        run_cli_stdout("search threshold --k 2 --pattern 1,1 --mode ramsey --max 6 --json",
                       &code);
    CHECK(code == 0);
    CHECK(out.find("\"threshold\": 5") != std::string::npos);
}

TEST_CASE("search decide exit code 3 on budget exhaustion") {
    CHECK(run_cli("search decide --k 3 --pattern 2,2 --mode gallai --N 8 --budget 10") == 3);
}

TEST_CASE("stability command on a pentagon blow-up") {
    CHECK(run_cli("construct pentagon --sizes 17 17 17 17 18 --out cli_s.txt") == 0);
    int code = 0;
    const auto out = run_cli_stdout("stability cli_s.txt --n 36 --r 8 --json", &code);
    CHECK(code == 0);
    CHECK(out.find("\"holds_hypothesis\": true") != std::string::npos);
    CHECK(out.find("\"conclusion_holds\": true") != std::string::npos);
    std::remove("cli_s.txt");
}

TEST_CASE("coloring file round-trip across the witness builders") {
    const auto witnesses = {gallai::build_small_m_lower(23, 3, 4),
                            gallai::build_equal_lower(5, 4),
                            gallai::build_general_lower(10, 4, 3)};
    for (const auto& w : witnesses) {
        const auto text = gallai::emit_coloring(w.coloring);
        CHECK(gallai::parse_coloring(text) == w.coloring);
    }
}
