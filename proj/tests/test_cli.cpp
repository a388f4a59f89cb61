#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    std::string command = g_binary + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

nlohmann::json payload_of(const std::string& output, const std::string& command, int n) {
    auto record = nlohmann::json::parse(output);
    CHECK(record["schema_version"] == "1");
    CHECK(record["command"] == command);
    CHECK(record["n"] == n);
    return record["payload"];
}

}  // namespace

TEST_CASE("spectrum plain output") {
    auto result = run_cli("spectrum --n 5");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "2/5*pi"));
    CHECK(contains(result.output, "2/3*pi"));
    CHECK(contains(result.output, "4/5*pi"));
    CHECK(contains(result.output, "critical values: 3"));
    CHECK(contains(result.output, "critical points: 7"));
    CHECK(contains(result.output, "above pi/2: 2"));
}

TEST_CASE("spectrum json output") {
    auto result = run_cli("spectrum --n 9 --format json");
    REQUIRE(result.exit_code == 0);
    auto payload = payload_of(result.output, "spectrum", 9);
    CHECK(payload["phi"] == 9);
    CHECK(payload["psi"] == 5);
    CHECK(payload["total_critical_points"] == "187");
    REQUIRE(payload["levels"].size() == 9);

    // the level at 2/3 carries two strata with distinct indices
    bool found = false;
    for (const auto& level : payload["levels"]) {
        if (level["value"]["num"] == 2 && level["value"]["den"] == 3) {
            found = true;
            REQUIRE(level["strata"].size() == 2);
            CHECK(level["strata"][0]["alpha"] == 3);
            CHECK(level["strata"][0]["index"] == 4);
            CHECK(level["strata"][0]["count"] == "84");
            CHECK(level["strata"][1]["alpha"] == 9);
            CHECK(level["strata"][1]["beta"] == 6);
            CHECK(level["strata"][1]["index"] == 5);
            CHECK(level["strata"][1]["count"] == "1");
        }
    }
    CHECK(found);
}

TEST_CASE("spectrum csv output") {
    auto result = run_cli("spectrum --n 5 --format csv");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "level,value,alpha,beta,count,index"));
    CHECK(contains(result.output, "1,2/5,5,2,1,1"));
    CHECK(contains(result.output, "2,2/3,3,2,5,2"));
    CHECK(contains(result.output, "3,4/5,5,4,1,3"));
}

TEST_CASE("even n is rejected with exit 2") {
    auto result = run_cli("spectrum --n 4");
    CHECK(result.exit_code == 2);
    CHECK(contains(result.output, "odd"));
}

TEST_CASE("chi at an exact fraction") {
    auto result = run_cli("chi --n 5 --a 1/2 --format json");
    REQUIRE(result.exit_code == 0);
    auto payload = payload_of(result.output, "chi", 5);
    CHECK(payload["chi"] == "-8");
    CHECK(payload["position"]["kind"] == "interval");
    CHECK(payload["position"]["index"] == 1);
    REQUIRE(payload["contributions"].size() == 2);
    CHECK(payload["contributions"][0]["increment"] == "2");
    CHECK(payload["contributions"][1]["increment"] == "-10");
}

TEST_CASE("chi at a critical value is flagged") {
    auto result = run_cli("chi --n 5 --a 2/3");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "at-critical"));
    CHECK(contains(result.output, "chi = -3"));
}

TEST_CASE("chi snaps decimals when asked") {
    auto result = run_cli("chi --n 7 --a 0.5 --snap-den 1000 --format json");
    REQUIRE(result.exit_code == 0);
    auto payload = payload_of(result.output, "chi", 7);
    CHECK(payload["chi"] == "32");
    CHECK(payload["a"]["num"] == 1);
    CHECK(payload["a"]["den"] == 2);
}

TEST_CASE("chi exit codes for bad angles") {
    CHECK(run_cli("chi --n 5 --a 3/2").exit_code == 2);          // outside (0, pi)
    CHECK(run_cli("chi --n 5 --a 0/1").exit_code == 2);          // zero sentinel
    CHECK(run_cli("chi --n 5 --a 0.5").exit_code == 2);          // decimal without snap-den
    CHECK(run_cli("chi --n 5 --a nonsense").exit_code == 2);
    // 0.333333 is 3.3e-7 away from 1/3: not snappable at 1e-9
    auto snap = run_cli("chi --n 5 --a 0.333333 --snap-den 1000");
    CHECK(snap.exit_code == 3);
}

TEST_CASE("omega tables") {
    auto result = run_cli("omega --n 5 --format json");
    REQUIRE(result.exit_code == 0);
    auto payload = payload_of(result.output, "omega", 5);
    REQUIRE(payload["table"].size() == 3);
    CHECK(payload["table"][0]["chi"] == "-6");
    CHECK(payload["table"][1]["chi"] == "-8");
    CHECK(payload["table"][2]["chi"] == "2");
    CHECK(payload["closed_forms_match"] == true);

    auto three = run_cli("omega --n 3 --format json");
    REQUIRE(three.exit_code == 0);
    auto payload3 = payload_of(three.output, "omega", 3);
    REQUIRE(payload3["table"].size() == 1);
    CHECK(payload3["table"][0]["chi"] == "2");
}

TEST_CASE("verify runs green and exits 0") {
    auto result = run_cli("verify --n-max 9 --oracle-max 9 --format json");
    REQUIRE(result.exit_code == 0);
    auto payload = payload_of(result.output, "verify", 9);
    CHECK(payload["all_passed"] == true);
    CHECK(payload["checks"].size() > 0);
    for (const auto& check : payload["checks"]) CHECK(check["passed"] == true);
}

TEST_CASE("an injected fault turns verify red with exit 1") {
    auto result = run_cli("verify --n-max 3 --oracle-max 3 --inject-fault");
    CHECK(result.exit_code == 1);
    CHECK(contains(result.output, "FAIL injected.synthetic_failure"));
}

TEST_CASE("oracle agreement report") {
    auto result = run_cli("oracle --n 9 --jobs 2 --format json");
    REQUIRE(result.exit_code == 0);
    auto payload = payload_of(result.output, "oracle", 9);
    CHECK(payload["total"] == "187");
    CHECK(payload["all_match"] == true);
    CHECK(payload["morse_indices_match"] == true);
}

TEST_CASE("asymptotics table") {
    auto result = run_cli("asymptotics --n-max 201 --format json");
    REQUIRE(result.exit_code == 0);
    auto payload = payload_of(result.output, "asymptotics", 201);
    REQUIRE(payload["rows"].size() > 3);
    const auto& last = payload["rows"].back();
    CHECK(last["n"] == 201);
    double values_ratio = last["critical_values_ratio"].get<double>();
    CHECK(values_ratio > 0.8);
    CHECK(values_ratio < 1.2);
}

TEST_CASE("json output is deterministic and round-trips") {
    for (const std::string args :
         {std::string("spectrum --n 9 --format json"), std::string("chi --n 5 --a 1/2 --format json"),
          std::string("omega --n 7 --format json")}) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        REQUIRE(first.exit_code == 0);
        CHECK(first.output == second.output);
        auto parsed = nlohmann::ordered_json::parse(first.output);
        CHECK(parsed.dump(2) + "\n" == first.output);
    }
}

TEST_CASE("missing subcommand exits 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

int main(int argc, char** argv) {
    doctest::Context context;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--bin=", 0) == 0) g_binary = arg.substr(6);
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: cli_tests --bin=<path to sphpoly binary>\n");
        return 1;
    }
    context.applyCommandLine(argc, argv);
    return context.run();
}
