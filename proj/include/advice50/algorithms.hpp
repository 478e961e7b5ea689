#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "advice50/families.hpp"
#include "advice50/statevector.hpp"

namespace advice50::algorithms {

/// Outcome of one algorithm run. final_state is the pre-measurement state;
/// the transcript holds the measurements performed on it in order.
/// oracle_queries counts evaluations of the problem family only; the
/// delta(0, x) step inside the Grover diffusion is not a query.
struct RunResult {
    families::Kind kind = families::Kind::Deutsch;
    int n = 1;
    std::size_t k_index = 0;  ///< oracle choice, measured or prepared
    qstate::StateVector final_state;
    std::vector<qstate::MeasurementRecord> transcript;
    std::optional<families::SolutionCharacter> solution;
    std::optional<std::uint32_t> orthogonal;  ///< Simon iteration: measured s
    std::vector<std::uint32_t> samples;       ///< Simon full run: all measured s
    bool success = true;
    int oracle_queries = 0;
};

/// Prepare, evaluate once, Hadamard X, then measure K and X.
/// Conditioned on k: X reads 0 exactly for the constant tables.
RunResult run_deutsch(std::uint64_t seed = 0);
RunResult run_deutsch_jozsa(int n, std::uint64_t seed = 0);

/// One round of the iterated algorithm. When k_index is empty the round
/// samples the oracle choice by measuring K; otherwise K starts collapsed
/// to |k> and only X is measured. The measured s always satisfies s.h = 0.
/// The SplitRng overload lets a caller keep one generator across rounds.
RunResult run_simon_iteration(const families::OracleFamily& family,
                              std::optional<std::size_t> k_index, SplitRng& rng);
RunResult run_simon_iteration(const families::OracleFamily& family,
                              std::optional<std::size_t> k_index, std::uint64_t rng_seed);

/// Iterate until n-1 linearly independent nonzero strings are collected or
/// the budget runs out. Budget exhaustion is a failure result, not an error.
RunResult run_simon_full(int n, int max_iterations, std::uint64_t seed);

/// Iterated evaluate-and-diffuse. The default iteration count is
/// default_grover_iterations(n). Requires n >= 2.
RunResult run_grover(int n, std::optional<int> iterations = {}, std::uint64_t seed = 0);

/// The original (non-extended) algorithm: K prepared in the basis state |k>
/// instead of being measured at the end. Its X-marginal reproduces the
/// extended run's conditional X-distribution given k.
RunResult run_backdated(families::Kind kind, int n, std::size_t k_index,
                        std::uint64_t seed = 0, std::optional<int> iterations = {});

/// First argmax over t in [0, floor(2 * 2^{n/2})] of the exact simulated
/// success probability P(X = k) after t rounds.
int default_grover_iterations(int n);

/// success_curve[t] = P(X = k) after t rounds, simulated exactly on the
/// X register (identical for every k by symmetry).
std::vector<double> grover_success_curve(int n, int t_max);

struct Gf2Solution {
    int rank = 0;
    std::optional<std::uint32_t> hidden;  ///< set iff rank == n - 1
};

/// Gaussian elimination over GF(2). Returns the unique nonzero h with
/// s . h = 0 for every s when the span has dimension n-1; fewer dimensions
/// leave hidden empty (underdetermined). Rank n means the input cannot come
/// from a two-to-one family; that throws std::invalid_argument.
Gf2Solution gf2_rank_and_solve(std::span<const std::uint32_t> strings, int n);

}  // namespace advice50::algorithms
