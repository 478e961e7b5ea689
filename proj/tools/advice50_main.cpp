#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "advice50/advice.hpp"
#include "advice50/algorithms.hpp"
#include "advice50/histories.hpp"
#include "advice50/json_io.hpp"

namespace {

using advice50::families::Kind;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
    std::string kind = "deutsch";
    int n = 0;  // 0 = per-kind default
    std::uint64_t seed = 0;
    std::optional<int> iterations;
    double tolerance = 1e-12;
    std::string format = "text";
    std::optional<std::string> out;
};

int default_n(Kind kind) { return kind == Kind::Deutsch ? 1 : 2; }

std::optional<int> cap_override() {
    const char* raw = std::getenv("ADVICE50_CAP_OVERRIDE");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    return std::atoi(raw);
}

// Per-kind n ranges, chosen so every command finishes in well under a minute.
// ADVICE50_CAP_OVERRIDE raises the upper bound at the user's risk.
void check_caps(Kind kind, int n, const std::string& command) {
    int lo = 1;
    int hi = 1;
    switch (kind) {
        case Kind::Deutsch: lo = hi = 1; break;
        case Kind::DeutschJozsa: lo = 1; hi = 3; break;
        case Kind::Simon: lo = 2; hi = 3; break;
        case Kind::Grover:
            lo = 2;
            hi = command == "run" ? 10 : 6;
            break;
    }
    if (const auto raised = cap_override(); raised && *raised > hi) hi = *raised;
    if (n < lo || n > hi) {
        throw std::invalid_argument("n = " + std::to_string(n) + " outside the " +
                    advice50::families::kind_name(kind) + " cap [" + std::to_string(lo) +
                    ", " + std::to_string(hi) + "] for " + command);
    }
}

void add_common_options(CLI::App* cmd, Config& config, bool with_kind = true) {
    if (with_kind) {
        cmd->add_option("--kind", config.kind, "Problem kind")
            ->check(CLI::IsMember({"deutsch", "dj", "simon", "grover"}))
            ->required();
        cmd->add_option("--n", config.n, "Query register width in bits");
    }
    cmd->add_option("--seed", config.seed, "RNG seed (64-bit unsigned)");
    cmd->add_option("--iterations", config.iterations, "Iteration count / budget");
    cmd->add_option("--tolerance", config.tolerance, "Residual tolerance");
    cmd->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", config.out, "Output path (default: stdout)");
}

int run_command(const Config& config) {
    const Kind kind = advice50::families::kind_from_name(config.kind);
    const int n = config.n > 0 ? config.n : default_n(kind);
    check_caps(kind, n, "run");

    advice50::algorithms::RunResult result;
    switch (kind) {
        case Kind::Deutsch:
            result = advice50::algorithms::run_deutsch(config.seed);
            break;
        case Kind::DeutschJozsa:
            result = advice50::algorithms::run_deutsch_jozsa(n, config.seed);
            break;
        case Kind::Simon:
            result = advice50::algorithms::run_simon_full(
                n, config.iterations.value_or(3 * n), config.seed);
            break;
        case Kind::Grover:
            result = advice50::algorithms::run_grover(n, config.iterations, config.seed);
            break;
    }
    const std::string payload = config.format == "json"
                                    ? advice50::io::run_result_to_json(result).dump(2)
                                    : advice50::io::run_result_to_text(result);
    advice50::io::write_output(payload, config.out);
    return kExitOk;
}

int verify_histories_command(const Config& config) {
    const Kind kind = advice50::families::kind_from_name(config.kind);
    const int n = config.n > 0 ? config.n : default_n(kind);
    check_caps(kind, n, "verify-histories");

    const auto family = advice50::families::enumerate_family(kind, n);
    std::vector<advice50::histories::EquivalenceReport> reports;
    reports.push_back(advice50::histories::verify_history_equivalence(
        family, advice50::histories::HistoryMode::Shortcut, config.tolerance));
    if (kind == Kind::Deutsch || kind == Kind::DeutschJozsa) {
        reports.push_back(advice50::histories::verify_history_equivalence(
            family, advice50::histories::HistoryMode::Literal, config.tolerance));
    }

    bool all_pass = true;
    std::string payload;
    if (config.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& report : reports) {
            j.push_back(advice50::io::equivalence_report_to_json(report));
        }
        payload = j.dump(2);
    } else {
        for (const auto& report : reports) {
            payload += advice50::io::equivalence_report_to_text(report);
        }
    }
    for (const auto& report : reports) all_pass = all_pass && report.pass;
    advice50::io::write_output(payload, config.out);
    return all_pass ? kExitOk : kExitVerificationFailed;
}

int verify_50_command(const Config& config) {
    const Kind kind = advice50::families::kind_from_name(config.kind);
    const int n = config.n > 0 ? config.n : default_n(kind);
    check_caps(kind, n, "verify-50");

    const auto report = advice50::advice::verify_50_rule(kind, n);
    const std::string payload = config.format == "json"
                                    ? advice50::io::query_report_to_json(report).dump(2)
                                    : advice50::io::query_report_to_text(report);
    advice50::io::write_output(payload, config.out);
    return report.rule_holds ? kExitOk : kExitVerificationFailed;
}

int report_command(const Config& config) {
    const std::vector<std::pair<Kind, int>> battery = {
        {Kind::Deutsch, 1}, {Kind::DeutschJozsa, 2}, {Kind::Simon, 2}, {Kind::Grover, 2}};
    std::vector<advice50::advice::QueryReport> reports;
    reports.reserve(battery.size());
    for (const auto& [kind, n] : battery) {
        reports.push_back(advice50::advice::verify_50_rule(kind, n));
    }
    const auto rows = advice50::advice::speedup_summary(reports);
    const std::string payload = config.format == "json"
                                    ? advice50::io::summary_to_json(rows).dump(2)
                                    : advice50::io::summary_to_text(rows);
    advice50::io::write_output(payload, config.out);
    for (const auto& row : rows) {
        if (!row.holds) return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Oracle-extended quantum query algorithms and their classical"
                 " advanced-information counterparts"};
    app.require_subcommand(1);

    Config config;
    CLI::App* run = app.add_subcommand("run", "Run one algorithm and print the result");
    add_common_options(run, config);
    CLI::App* histories =
        app.add_subcommand("verify-histories",
                           "Check that summed classical histories reproduce function evaluation");
    add_common_options(histories, config);
    CLI::App* fifty =
        app.add_subcommand("verify-50", "Compare quantum and advised-classical query counts");
    add_common_options(fifty, config);
    CLI::App* report = app.add_subcommand("report", "Query-count summary for all four kinds");
    add_common_options(report, config, /*with_kind=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) return run_command(config);
        if (histories->parsed()) return verify_histories_command(config);
        if (fifty->parsed()) return verify_50_command(config);
        if (report->parsed()) return report_command(config);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
