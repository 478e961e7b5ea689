#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "advice50/families.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path capture =
        fs::temp_directory_path() / ("advice50_cli_" + std::to_string(counter++) + ".out");
    std::string cmd = env_prefix.empty() ? "" : env_prefix + " ";
    cmd += std::string(ADVICE50_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(capture);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    fs::remove(capture);
    return result;
}

}  // namespace

TEST_CASE("verify-histories exits clean when the reconstruction matches") {
    const auto result = run_cli("verify-histories --kind deutsch");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("pass") != std::string::npos);

    const auto json_result = run_cli("verify-histories --kind simon --n 2 --format json");
    CHECK(json_result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json_result.output);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);  // shortcut only for this kind
    CHECK(parsed[0].at("pass") == true);
    CHECK(parsed[0].at("mode") == "shortcut");

    const auto both = run_cli("verify-histories --kind dj --n 2 --format json");
    const auto both_parsed = nlohmann::json::parse(both.output);
    REQUIRE(both_parsed.size() == 2);  // shortcut plus literal
}

TEST_CASE("verify-histories signals failure through the exit code, not a crash") {
    // An impossible tolerance forces the verification branch to report failure.
    const auto result = run_cli("verify-histories --kind grover --n 2 --tolerance 0");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("FAIL") != std::string::npos);
}

TEST_CASE("verify-50 emits the flat report") {
    const auto result = run_cli("verify-50 --kind grover --n 2 --format json");
    CHECK(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.output);
    CHECK(parsed.at("no_advice") == 3);
    CHECK(parsed.at("with_advice") == 1);
    CHECK(parsed.at("quantum") == 1);
    CHECK(parsed.at("holds") == true);
}

TEST_CASE("run recovers the hidden string that the chosen table encodes") {
    const auto result = run_cli("run --kind simon --n 3 --seed 7 --iterations 9 --format json");
    CHECK(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.output);
    CHECK(parsed.at("kind") == "simon");
    CHECK(parsed.at("oracle_queries").get<int>() <= 9);
    REQUIRE(parsed.at("success") == true);

    const auto family = advice50::families::enumerate_family(advice50::families::Kind::Simon, 3);
    const auto k = parsed.at("k_index").get<std::size_t>();
    // Collision scan over the table is the independent check.
    const auto h = oracles::collision_offset(family.tables.at(k).values);
    REQUIRE(h.has_value());
    CHECK(parsed.at("solution").at("bits") == advice50::families::bit_string(*h, 3));
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const std::string args :
         {std::string("run --kind simon --n 3 --seed 7 --iterations 9 --format json"),
          std::string("run --kind grover --n 4 --seed 3 --format json"),
          std::string("verify-50 --kind dj --n 2 --format json"),
          std::string("report --format json")}) {
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
    }
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("run --kind shor").exit_code == 2);
    CHECK(run_cli("run --kind dj --n 7").exit_code == 2);
    CHECK(run_cli("verify-50 --kind grover --n 7").exit_code == 2);
    CHECK(run_cli("run").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("run --kind simon --n 3 --out /nonexistent-dir/x.json").exit_code == 2);
}

TEST_CASE("the cap override env raises the ceiling") {
    CHECK(run_cli("verify-50 --kind grover --n 7").exit_code == 2);
    const auto raised = run_cli("verify-50 --kind grover --n 7 --format json",
                                "ADVICE50_CAP_OVERRIDE=7");
    CHECK(raised.exit_code == 0);
    const auto parsed = nlohmann::json::parse(raised.output);
    CHECK(parsed.at("no_advice") == 127);
    CHECK(parsed.at("with_advice") == 15);
}

TEST_CASE("report prints one row per kind") {
    const auto result = run_cli("report --format json");
    CHECK(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.output);
    REQUIRE(parsed.size() == 4);
    CHECK(parsed[0].at("kind") == "deutsch");
    CHECK(parsed[1].at("kind") == "dj");
    CHECK(parsed[2].at("kind") == "simon");
    CHECK(parsed[3].at("kind") == "grover");
    for (const auto& row : parsed) CHECK(row.at("holds") == true);

    const auto text = run_cli("report");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("deutsch") != std::string::npos);
}

TEST_CASE("output lands in the requested file") {
    const fs::path out = fs::temp_directory_path() / "advice50_report.json";
    fs::remove(out);
    const auto result = run_cli("verify-50 --kind deutsch --format json --out " + out.string());
    CHECK(result.exit_code == 0);
    REQUIRE(fs::exists(out));
    std::ifstream in(out);
    nlohmann::json parsed;
    in >> parsed;
    CHECK(parsed.at("quantum") == 1);
    fs::remove(out);
}
