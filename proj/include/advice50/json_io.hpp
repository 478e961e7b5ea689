#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "advice50/advice.hpp"
#include "advice50/algorithms.hpp"
#include "advice50/histories.hpp"

namespace advice50::io {

/// Round to 15 significant digits; keeps serialized floats free of noise.
double round_sig(double value, int digits = 15);

nlohmann::json state_to_json(const qstate::StateVector& state);
qstate::StateVector state_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const families::OracleFamily& family);

nlohmann::json solution_to_json(const families::SolutionCharacter& sol, int n);
nlohmann::json run_result_to_json(const algorithms::RunResult& result);
std::string run_result_to_text(const algorithms::RunResult& result);

nlohmann::json query_report_to_json(const advice::QueryReport& report);
std::string query_report_to_text(const advice::QueryReport& report);

nlohmann::json equivalence_report_to_json(const histories::EquivalenceReport& report);
std::string equivalence_report_to_text(const histories::EquivalenceReport& report);

/// One JSON-lines row per history: k, advice, query, v, phase.
nlohmann::json history_to_json(const histories::History& history, const families::OracleFamily& family);

nlohmann::json summary_to_json(std::span<const advice::SummaryRow> rows);
std::string summary_to_text(std::span<const advice::SummaryRow> rows);

/// Newline-terminated write to path or stdout. Throws std::runtime_error
/// when the path cannot be written.
void write_output(const std::string& payload, const std::optional<std::string>& path);

}  // namespace advice50::io
