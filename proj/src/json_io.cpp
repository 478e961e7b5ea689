#include "advice50/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace advice50::io {

namespace {

using nlohmann::json;

json complex_to_json(const qstate::Amplitude& a) {
    return json::array({round_sig(a.real()), round_sig(a.imag())});
}

std::string solution_tag_name(families::SolutionCharacter::Tag tag) {
    using Tag = families::SolutionCharacter::Tag;
    switch (tag) {
        case Tag::Constant: return "constant";
        case Tag::Balanced: return "balanced";
        case Tag::HiddenString: return "hidden-string";
        case Tag::Location: return "location";
    }
    throw std::logic_error("unreachable tag");
}

json record_to_json(const qstate::MeasurementRecord& record) {
    return json{{"register", qstate::register_name(record.reg)},
                {"outcome", record.outcome},
                {"probability", round_sig(record.probability)}};
}

}  // namespace

double round_sig(double value, int digits) {
    if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*e", digits - 1, value);
    return std::strtod(buffer, nullptr);
}

json state_to_json(const qstate::StateVector& state) {
    json amps = json::array();
    for (const auto& a : state.amplitudes) amps.push_back(complex_to_json(a));
    return json{{"layout",
                 {{"k_count", state.layout.k_count},
                  {"x_count", state.layout.x_count},
                  {"v_count", state.layout.v_count}}},
                {"amplitudes", std::move(amps)}};
}

qstate::StateVector state_from_json(const json& j) {
    qstate::StateVector state;
    state.layout.k_count = j.at("layout").at("k_count").get<std::size_t>();
    state.layout.x_count = j.at("layout").at("x_count").get<std::size_t>();
    state.layout.v_count = j.at("layout").at("v_count").get<std::size_t>();
    state.layout.validate();
    for (const auto& pair : j.at("amplitudes")) {
        state.amplitudes.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    if (state.amplitudes.size() != state.layout.dim()) {
        throw std::invalid_argument("amplitude count does not match the layout");
    }
    return state;
}

json family_to_json(const families::OracleFamily& family) {
    json suffixes = json::array();
    for (const auto& table : family.tables) suffixes.push_back(table.suffix);
    return json{{"kind", families::kind_name(family.kind)},
                {"n", family.n},
                {"m", family.m},
                {"suffixes", std::move(suffixes)}};
}

json solution_to_json(const families::SolutionCharacter& sol, int n) {
    json j{{"tag", solution_tag_name(sol.tag)}};
    if (sol.tag == families::SolutionCharacter::Tag::HiddenString ||
        sol.tag == families::SolutionCharacter::Tag::Location) {
        j["bits"] = families::bit_string(sol.bits, n);
    }
    return j;
}

json run_result_to_json(const algorithms::RunResult& result) {
    json j{{"kind", families::kind_name(result.kind)},
           {"n", result.n},
           {"k_index", result.k_index},
           {"oracle_queries", result.oracle_queries},
           {"success", result.success}};
    json transcript = json::array();
    for (const auto& record : result.transcript) transcript.push_back(record_to_json(record));
    j["transcript"] = std::move(transcript);
    if (result.solution) j["solution"] = solution_to_json(*result.solution, result.n);
    if (result.orthogonal) j["orthogonal"] = families::bit_string(*result.orthogonal, result.n);
    if (!result.samples.empty()) {
        json samples = json::array();
        for (std::uint32_t s : result.samples) samples.push_back(families::bit_string(s, result.n));
        j["samples"] = std::move(samples);
    }
    return j;
}

std::string run_result_to_text(const algorithms::RunResult& result) {
    std::ostringstream out;
    out << "kind: " << families::kind_name(result.kind) << "  n: " << result.n << "\n";
    out << "oracle choice k: index " << result.k_index << "\n";
    out << "oracle queries: " << result.oracle_queries << "\n";
    out << "success: " << (result.success ? "yes" : "no") << "\n";
    if (result.solution) {
        out << "solution: " << solution_to_json(*result.solution, result.n).dump() << "\n";
    }
    if (result.orthogonal) {
        out << "orthogonal string: " << families::bit_string(*result.orthogonal, result.n) << "\n";
    }
    if (!result.samples.empty()) {
        out << "samples:";
        for (std::uint32_t s : result.samples) out << ' ' << families::bit_string(s, result.n);
        out << "\n";
    }
    for (const auto& record : result.transcript) {
        out << "measured " << qstate::register_name(record.reg) << " = " << record.outcome
            << " (p = " << round_sig(record.probability) << ")\n";
    }
    return out.str();
}

json query_report_to_json(const advice::QueryReport& report) {
    return json{{"kind", families::kind_name(report.kind)},
                {"n", report.n},
                {"no_advice", report.worst_case_no_advice},
                {"with_advice", report.worst_case_with_advice},
                {"quantum", report.quantum_queries},
                {"holds", report.rule_holds}};
}

std::string query_report_to_text(const advice::QueryReport& report) {
    std::ostringstream out;
    out << families::kind_name(report.kind) << " n=" << report.n
        << ": no-advice " << report.worst_case_no_advice
        << " / with-advice " << report.worst_case_with_advice
        << " / quantum " << report.quantum_queries
        << " -> " << (report.rule_holds ? "holds" : "VIOLATED") << "\n";
    return out.str();
}

json equivalence_report_to_json(const histories::EquivalenceReport& report) {
    json residuals = json::array();
    for (double r : report.per_k_residuals) residuals.push_back(round_sig(r));
    return json{{"kind", families::kind_name(report.kind)},
                {"n", report.n},
                {"mode", histories::mode_name(report.mode)},
                {"tolerance", report.tolerance},
                {"histories", report.history_count},
                {"merged_duplicates", report.merged_duplicates},
                {"per_k_residuals", std::move(residuals)},
                {"max_residual", round_sig(report.max_residual)},
                {"global_residual", round_sig(report.global_residual)},
                {"pass", report.pass}};
}

std::string equivalence_report_to_text(const histories::EquivalenceReport& report) {
    std::ostringstream out;
    out << families::kind_name(report.kind) << " n=" << report.n << " ("
        << histories::mode_name(report.mode) << "): " << report.history_count << " histories, "
        << "max residual " << round_sig(report.max_residual) << ", global residual "
        << round_sig(report.global_residual) << " -> " << (report.pass ? "pass" : "FAIL") << "\n";
    return out.str();
}

json history_to_json(const histories::History& history, const families::OracleFamily& family) {
    json advice_entries = json::array();
    for (const auto& [key, value] : history.advice.entries) {
        if (history.advice.form == histories::AdviceSpec::Form::Bits) {
            advice_entries.push_back(json{{"position", key}, {"bit", value}});
        } else {
            advice_entries.push_back(json{{"x", families::bit_string(key, family.n)},
                                          {"value", families::bit_string(value, family.m)}});
        }
    }
    json queries = json::array();
    for (std::uint32_t x : history.query_xs) queries.push_back(families::bit_string(x, family.n));
    return json{{"k", family.tables[history.k_index].suffix},
                {"advice", std::move(advice_entries)},
                {"query", std::move(queries)},
                {"v", families::bit_string(history.v_initial, family.m)},
                {"phase", history.phase}};
}

json summary_to_json(std::span<const advice::SummaryRow> rows) {
    json out = json::array();
    for (const auto& row : rows) {
        out.push_back(json{{"kind", families::kind_name(row.kind)},
                           {"n", row.n},
                           {"no_advice", row.no_advice},
                           {"with_advice", row.with_advice},
                           {"quantum", row.quantum},
                           {"holds", row.holds},
                           {"growth", row.growth}});
    }
    return out;
}

std::string summary_to_text(std::span<const advice::SummaryRow> rows) {
    std::ostringstream out;
    out << "kind      n   no-advice   with-advice   quantum   rule     speed-up\n";
    for (const auto& row : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-9s %-3d %-11d %-13d %-9d %-8s %s\n",
                      families::kind_name(row.kind).c_str(), row.n, row.no_advice,
                      row.with_advice, row.quantum, row.holds ? "holds" : "VIOLATED",
                      row.growth.c_str());
        out << line;
    }
    return out.str();
}

void write_output(const std::string& payload, const std::optional<std::string>& path) {
    std::string body = payload;
    if (body.empty() || body.back() != '\n') body.push_back('\n');
    if (!path) {
        std::cout << body;
        std::cout.flush();
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + *path);
    out << body;
    if (!out) throw std::runtime_error("failed writing output path: " + *path);
}

}  // namespace advice50::io
