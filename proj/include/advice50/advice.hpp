#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "advice50/families.hpp"
#include "advice50/histories.hpp"

namespace advice50::advice {

/// What the classical player must pin down.
///   Character        constant vs balanced (Deutsch, Deutsch&Jozsa)
///   HiddenString     the Simon period h
///   OrthogonalString any nonzero s with s.h = 0, the reformulated Simon
///                    target matching what one quantum iteration delivers
///   Location         the Grover database location
enum class Target { Character, HiddenString, OrthogonalString, Location };

std::string target_name(Target target);
Target default_target(families::Kind kind);

/// Family indices consistent with an advice spec.
std::vector<std::size_t> consistent_candidates(const families::OracleFamily& family,
                                               const histories::AdviceSpec& advice);

/// Minimum over adaptive deterministic strategies of the maximum over
/// consistent oracle choices of the number of evaluations needed to pin the
/// target. Exhaustive game-tree search, memoized on the consistent set (for
/// Grover on its size, which is exact by location-permutation symmetry).
/// Zero queries when every remaining candidate already shares the target.
int minimax_queries(const families::OracleFamily& family, Target target);

/// Same, starting from the candidates consistent with one advice spec.
int minimax_queries(const families::OracleFamily& family, Target target,
                    const histories::AdviceSpec& advice);

/// Worst case over the whole advice class: the max over every good advice
/// spec of every choice k of the per-spec minimax.
int minimax_queries_with_advice(const families::OracleFamily& family, Target target);

struct QueryReport {
    families::Kind kind = families::Kind::Deutsch;
    int n = 1;
    int worst_case_no_advice = 0;
    int worst_case_with_advice = 0;
    int quantum_queries = 0;
    bool rule_holds = false;
};

/// Fills a QueryReport for the kind's default target. The quantum column is
/// taken from an actual run (per-iteration count for Simon). rule_holds is
/// quantum == with-advice for the structured kinds; for Grover both columns
/// must lie within a factor of 4 of 2^{n/2}.
QueryReport verify_50_rule(families::Kind kind, int n);

struct SummaryRow {
    families::Kind kind = families::Kind::Deutsch;
    int n = 1;
    int no_advice = 0;
    int with_advice = 0;
    int quantum = 0;
    bool holds = false;
    std::string growth;  ///< speed-up class of no-advice vs with-advice
};

std::vector<SummaryRow> speedup_summary(std::span<const QueryReport> reports);

}  // namespace advice50::advice
