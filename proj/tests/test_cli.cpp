#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef JHOPF_CLI_PATH
#error "JHOPF_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the binary with the given argument string and captures stdout; with
// merge_stderr the diagnostics stream is folded in, otherwise it is dropped.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(JHOPF_CLI_PATH) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    const int rc = pclose(pipe);
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    result.exit_code = WEXITSTATUS(rc);
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

nlohmann::json parse_report(const std::string& text) {
    nlohmann::json parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.is_array());
    return parsed;
}

nlohmann::json without_timings(nlohmann::json report) {
    for (auto& entry : report) entry.erase("elapsed_ms");
    return report;
}

const char* const kH2Beta4Witness =
    "partition formula: -{x1|x2}.{x4|x3} + {x2|x1}.{x4|x3} + {x3|x1}.{x4|x2} - {x3|x2}.{x4|x1}"
    " + {x4|x1}.{x3|x2} - {x4|x2}.{x3|x1} + {x4|x3}.{x1|x2} - {x4|x3}.{x2|x1};"
    " four-bracket expression: {x1|x2}.{x4|x3} - {x2|x1}.{x4|x3} + {x3|x1}.{x4|x2}"
    " - {x3|x2}.{x4|x1} + {x4|x1}.{x3|x2} - {x4|x2}.{x3|x1} - {x4|x3}.{x1|x2} + {x4|x3}.{x2|x1};"
    " symmetrized twist composite: -{x1|x2}.{x3|x4} + {x1|x2}.{x4|x3} - 2*{x2|x1}.{x4|x3}"
    " + {x3|x4}.{x1|x2} - {x4|x3}.{x1|x2} + 2*{x4|x3}.{x2|x1}";

}  // namespace

TEST_CASE("eval prints canonical element text") {
    RunResult r = run_cli("eval --expr 'x1.x2 + 3*x2.x1' --modulus 2 --dim 2 --degree 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x1.x2 + x2.x1\n");

    r = run_cli("eval --expr ' 2*x2 + x1 - x2 '");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x1 + x2\n");

    // Degree-bound truncation happens in the parser, like in products.
    r = run_cli("eval --expr 'x1.x2.x3 + x1' --dim 3 --degree 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x1\n");

    r = run_cli("eval --expr '1 - 1'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0\n");
}

TEST_CASE("eval rejects bad input with exit code 2") {
    RunResult r = run_cli("eval --expr 'x0'", true);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "error:"));

    CHECK(run_cli("eval --expr 'x5' --dim 4").exit_code == 2);
    CHECK(run_cli("eval --expr '3x1'").exit_code == 2);
    CHECK(run_cli("eval --expr 'x1' --modulus 1").exit_code == 2);
    CHECK(run_cli("eval --expr 'x1' --degree 0").exit_code == 2);
    CHECK(run_cli("eval").exit_code == 2);
}

TEST_CASE("single verification runs report one line plus a summary") {
    RunResult r = run_cli("verify cmn --p 2 --t 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[pass] cmn p=2 t=1"));
    CHECK(contains(r.output, "summary: 1 passed, 0 failed, 0 skipped"));

    r = run_cli("verify hopf-whitehead --n 5 --k 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[pass] hopf-whitehead k=3 n=5"));
    CHECK(contains(r.output, "note: homological route vanishes"));

    r = run_cli("verify power --p 2 --r 1 --t 2 --dim 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[skipped] power dim=5 p=2 r=1 t=2"));
    CHECK(contains(r.output, "note: p^(t+1) exceeds the desk-scale bound 5"));
    CHECK(contains(r.output, "summary: 0 passed, 0 failed, 1 skipped"));

    r = run_cli("verify trace --n 2 --trials 5 --seed 9");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[pass] trace n=2 seed=9 trials=5"));

    // Defaults are visible in the parameter record.
    r = run_cli("verify trace --n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[pass] trace n=2 seed=0 trials=100"));
}

TEST_CASE("a failing verification exits 1 and prints its witness") {
    const RunResult r = run_cli("verify h2-beta4");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "[fail] h2-beta4"));
    CHECK(contains(r.output, std::string("witness: ") + kH2Beta4Witness));
    CHECK(contains(r.output, "summary: 0 passed, 1 failed, 0 skipped"));
}

TEST_CASE("invalid check parameters exit 2 before any report") {
    RunResult r = run_cli("verify cmn --p 4 --t 1", true);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "error: cmn check: p must be prime"));

    CHECK(run_cli("verify hopf-whitehead --n 4 --k 2").exit_code == 2);
    CHECK(run_cli("verify power --p 2 --r 1 --t 1 --dim 2").exit_code == 2);
    CHECK(run_cli("verify trace --n 6").exit_code == 2);
    CHECK(run_cli("verify obstruction --p 2 --r 0 --t 0").exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("bogus").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("verify power --p 2").exit_code == 2);
    CHECK(run_cli("verify cmn --p 2 --t 1 --bogus").exit_code == 2);
    CHECK(run_cli("eval --expr x1 extra").exit_code == 2);
}

TEST_CASE("help is not an error") {
    RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "Usage"));
    CHECK(contains(r.output, "verify"));

    r = run_cli("verify --help");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "hopf-whitehead"));
}

TEST_CASE("JSON reports carry exactly the five documented fields") {
    const RunResult r = run_cli("verify obstruction --p 2 --r 1 --t 0 --json");
    CHECK(r.exit_code == 0);
    const nlohmann::json report = parse_report(r.output);
    REQUIRE(report.size() == 1);
    const nlohmann::json& entry = report[0];
    CHECK(entry.size() == 5);
    CHECK(entry.at("check") == "obstruction");
    CHECK(entry.at("params") == nlohmann::json({{"p", 2}, {"r", 1}, {"t", 0}}));
    CHECK(entry.at("status") == "pass");
    CHECK(entry.at("witness").is_null());
    CHECK(entry.at("elapsed_ms").is_number());
}

TEST_CASE("JSON failure reports embed the witness and repeat runs agree") {
    const RunResult first = run_cli("verify h2-beta4 --json");
    CHECK(first.exit_code == 1);
    const nlohmann::json report = parse_report(first.output);
    REQUIRE(report.size() == 1);
    CHECK(report[0].at("status") == "fail");
    CHECK(report[0].at("witness") == kH2Beta4Witness);
    CHECK(report[0].at("params") == nlohmann::json::object());

    const RunResult second = run_cli("verify h2-beta4 --json");
    CHECK(without_timings(parse_report(second.output)) == without_timings(report));
}

TEST_CASE("the full grid as JSON") {
    const RunResult r = run_cli("verify all --json");
    CHECK(r.exit_code == 1);
    const nlohmann::json report = parse_report(r.output);
    REQUIRE(report.size() == 19);

    int passed = 0, failed = 0, skipped = 0;
    std::string previous;
    for (const auto& entry : report) {
        CHECK(entry.size() == 5);
        const std::string status = entry.at("status");
        if (status == "pass") ++passed;
        if (status == "fail") ++failed;
        if (status == "skipped") ++skipped;
        CHECK((entry.at("witness").is_null() == (status != "fail")));
        const std::string name = entry.at("check");
        CHECK(previous <= name);
        previous = name;
    }
    CHECK(passed == 17);
    CHECK(failed == 1);
    CHECK(skipped == 1);
}

TEST_CASE("--out writes the report to a file") {
    const std::string path = "/tmp/jhopf_cli_out_test.txt";
    std::remove(path.c_str());
    const RunResult r = run_cli("verify h2-beta4 --out " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.empty());

    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(contains(content.str(), "[fail] h2-beta4"));
    CHECK(contains(content.str(), kH2Beta4Witness));
    std::remove(path.c_str());

    const RunResult bad = run_cli("verify cmn --p 2 --t 1 --out /nonexistent/dir/x.txt", true);
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "error: cannot open"));
}

TEST_CASE("hopf-word applies the combinatorial map") {
    RunResult r = run_cli("hopf-word --word 'x1 x2 x3' --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{x1|x2} {x1|x3} {x2|x3}\n");

    r = run_cli("hopf-word --word 'x1^2 x2^3' --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{x1|x2}^6\n");

    r = run_cli("hopf-word --word 'x1 x2 x3' --n 3 --k 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{x1|x2|x3}\n");

    r = run_cli("hopf-word --word 'x1' --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    CHECK(run_cli("hopf-word --word 'x9' --n 2").exit_code == 2);
    CHECK(run_cli("hopf-word --word 'x1 x2' --n 2 --k 0").exit_code == 2);
}

TEST_CASE("represent prints the square-zero image") {
    RunResult r = run_cli("represent --word '[x1,x2]' --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + y1.y2 - y2.y1\n");

    r = run_cli("represent --word '[x1,x2]^6' --n 2 --modulus 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    r = run_cli("represent --word '{x1|x2}^3' --n 2 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + 3*{y1|y2}\n");

    CHECK(run_cli("represent --word '{x1|x2}' --n 2").exit_code == 2);
    CHECK(run_cli("represent --word 'x1' --n 2 --modulus -1").exit_code == 2);
}

TEST_CASE("member-hn tests the equalizer condition") {
    RunResult r = run_cli("member-hn --word '[x1,x2]' --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "true\n");

    r = run_cli("member-hn --word 'x1 x2' --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "true\n");

    r = run_cli("member-hn --word 'x1' --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "false\n");

    CHECK(run_cli("member-hn --word '[x1,x2' --n 2").exit_code == 2);
}
