#include "advice50/algorithms.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace advice50::algorithms {

namespace {

using families::Kind;
using families::OracleFamily;
using families::SolutionCharacter;
using qstate::Amplitude;
using qstate::Register;
using qstate::RegisterLayout;
using qstate::StateVector;

std::vector<Amplitude> basis_amps(std::size_t count, std::size_t index) {
    std::vector<Amplitude> amps(count, Amplitude{0.0, 0.0});
    amps[index] = 1.0;
    return amps;
}

std::vector<Amplitude> uniform_amps(std::size_t count) {
    return std::vector<Amplitude>(count, Amplitude{1.0, 0.0});
}

StateVector prepared_state(const OracleFamily& family, std::optional<std::size_t> k_index) {
    RegisterLayout layout{family.size(), std::size_t{1} << family.n, std::size_t{1} << family.m};
    const auto k_amps = k_index ? basis_amps(layout.k_count, *k_index) : uniform_amps(layout.k_count);
    return qstate::make_product(layout, k_amps, uniform_amps(layout.x_count),
                                qstate::canonical_v_amps(family.kind, layout.v_count));
}

SolutionCharacter character_from_x(Kind kind, std::uint32_t x) {
    using Tag = SolutionCharacter::Tag;
    switch (kind) {
        case Kind::Deutsch:
        case Kind::DeutschJozsa:
            return {x == 0 ? Tag::Constant : Tag::Balanced, 0};
        case Kind::Grover:
            return {Tag::Location, x};
        case Kind::Simon:
            break;
    }
    throw std::logic_error("no direct solution readout for this kind");
}

// Evaluate once, rotate the X basis, then measure K and X.
RunResult run_single_stage(Kind kind, int n, std::uint64_t seed) {
    const OracleFamily family = families::enumerate_family(kind, n);
    StateVector state = prepared_state(family, std::nullopt);
    state = qstate::apply_oracle_xor(state, family);
    state = qstate::apply_hadamard_x(state);

    RunResult result;
    result.kind = kind;
    result.n = n;
    result.final_state = state;
    result.oracle_queries = 1;

    SplitRng rng(seed);
    auto [k_record, collapsed] = qstate::measure_register(state, Register::K, rng);
    auto [x_record, rest] = qstate::measure_register(collapsed, Register::X, rng);
    result.k_index = k_record.outcome;
    result.transcript = {k_record, x_record};
    result.solution = character_from_x(kind, static_cast<std::uint32_t>(x_record.outcome));
    return result;
}

}  // namespace

RunResult run_deutsch(std::uint64_t seed) { return run_single_stage(Kind::Deutsch, 1, seed); }

RunResult run_deutsch_jozsa(int n, std::uint64_t seed) {
    return run_single_stage(Kind::DeutschJozsa, n, seed);
}

RunResult run_simon_iteration(const OracleFamily& family,
                              std::optional<std::size_t> k_index, SplitRng& rng) {
    if (family.kind != Kind::Simon) throw std::invalid_argument("expected a simon family");
    if (k_index && *k_index >= family.size()) throw std::out_of_range("oracle choice out of range");

    StateVector state = prepared_state(family, k_index);
    state = qstate::apply_oracle_xor(state, family);
    state = qstate::apply_hadamard_x(state);

    RunResult result;
    result.kind = Kind::Simon;
    result.n = family.n;
    result.final_state = state;
    result.oracle_queries = 1;

    if (k_index) {
        result.k_index = *k_index;
    } else {
        auto [k_record, collapsed] = qstate::measure_register(state, Register::K, rng);
        result.k_index = k_record.outcome;
        result.transcript.push_back(k_record);
        state = std::move(collapsed);
    }
    auto [x_record, rest] = qstate::measure_register(state, Register::X, rng);
    result.transcript.push_back(x_record);
    result.orthogonal = static_cast<std::uint32_t>(x_record.outcome);
    return result;
}

RunResult run_simon_iteration(const OracleFamily& family,
                              std::optional<std::size_t> k_index, std::uint64_t rng_seed) {
    SplitRng rng(rng_seed);
    return run_simon_iteration(family, k_index, rng);
}

RunResult run_simon_full(int n, int max_iterations, std::uint64_t seed) {
    const OracleFamily family = families::enumerate_family(Kind::Simon, n);
    SplitRng rng(seed);

    RunResult result;
    result.kind = Kind::Simon;
    result.n = n;

    // Incremental GF(2) basis of the collected strings, one slot per leading bit.
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    int rank = 0;
    auto insert = [&rows, &rank](std::uint32_t s) {
        for (int b = static_cast<int>(rows.size()) - 1; b >= 0 && s != 0; --b) {
            if (!((s >> b) & 1u)) continue;
            if (rows[static_cast<std::size_t>(b)] == 0) {
                rows[static_cast<std::size_t>(b)] = s;
                ++rank;
                return;
            }
            s ^= rows[static_cast<std::size_t>(b)];
        }
    };

    std::optional<std::size_t> k;
    int iterations = 0;
    while (iterations < max_iterations && rank < n - 1) {
        RunResult step = run_simon_iteration(family, k, rng);
        ++iterations;
        k = step.k_index;
        result.k_index = step.k_index;
        result.final_state = step.final_state;
        for (const auto& record : step.transcript) result.transcript.push_back(record);
        result.samples.push_back(*step.orthogonal);
        insert(*step.orthogonal);
    }
    result.oracle_queries = iterations;
    result.success = rank == n - 1;
    if (result.success) {
        const Gf2Solution solved = gf2_rank_and_solve(result.samples, n);
        if (!solved.hidden) throw std::logic_error("independent strings did not pin the hidden string");
        result.solution = SolutionCharacter{SolutionCharacter::Tag::HiddenString, *solved.hidden};
        if (*solved.hidden != families::character(family, result.k_index).bits) {
            throw std::logic_error("recovered hidden string disagrees with the oracle table");
        }
    }
    return result;
}

RunResult run_grover(int n, std::optional<int> iterations, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("grover run requires n >= 2");
    const OracleFamily family = families::enumerate_family(Kind::Grover, n);
    const int rounds = iterations.value_or(default_grover_iterations(n));
    if (rounds < 0) throw std::invalid_argument("iteration count must be non-negative");

    StateVector state = prepared_state(family, std::nullopt);
    for (int t = 0; t < rounds; ++t) {
        state = qstate::apply_oracle_xor(state, family);
        state = qstate::apply_grover_u(state);
    }

    RunResult result;
    result.kind = Kind::Grover;
    result.n = n;
    result.final_state = state;
    result.oracle_queries = rounds;

    SplitRng rng(seed);
    auto [k_record, collapsed] = qstate::measure_register(state, Register::K, rng);
    auto [x_record, rest] = qstate::measure_register(collapsed, Register::X, rng);
    result.k_index = k_record.outcome;
    result.transcript = {k_record, x_record};
    result.solution = SolutionCharacter{SolutionCharacter::Tag::Location,
                                        static_cast<std::uint32_t>(x_record.outcome)};
    return result;
}

RunResult run_backdated(Kind kind, int n, std::size_t k_index,
                        std::uint64_t seed, std::optional<int> iterations) {
    const OracleFamily family = families::enumerate_family(kind, n);
    if (k_index >= family.size()) throw std::out_of_range("oracle choice out of range");

    StateVector state = prepared_state(family, k_index);
    int queries = 0;
    if (kind == Kind::Grover) {
        const int rounds = iterations.value_or(default_grover_iterations(n));
        for (int t = 0; t < rounds; ++t) {
            state = qstate::apply_oracle_xor(state, family);
            state = qstate::apply_grover_u(state);
        }
        queries = rounds;
    } else {
        state = qstate::apply_oracle_xor(state, family);
        state = qstate::apply_hadamard_x(state);
        queries = 1;
    }

    RunResult result;
    result.kind = kind;
    result.n = n;
    result.k_index = k_index;
    result.final_state = state;
    result.oracle_queries = queries;

    SplitRng rng(seed);
    auto [x_record, rest] = qstate::measure_register(state, Register::X, rng);
    result.transcript = {x_record};
    const auto x = static_cast<std::uint32_t>(x_record.outcome);
    if (kind == Kind::Simon) {
        result.orthogonal = x;
    } else {
        result.solution = character_from_x(kind, x);
    }
    return result;
}

std::vector<double> grover_success_curve(int n, int t_max) {
    const std::size_t count = std::size_t{1} << n;
    std::vector<double> amps(count, 1.0 / std::sqrt(static_cast<double>(count)));
    std::vector<double> curve;
    curve.reserve(static_cast<std::size_t>(t_max) + 1);
    curve.push_back(amps[0] * amps[0]);
    for (int t = 1; t <= t_max; ++t) {
        amps[0] = -amps[0];
        const double mean = std::accumulate(amps.begin(), amps.end(), 0.0) /
                            static_cast<double>(count);
        for (double& a : amps) a = 2.0 * mean - a;
        curve.push_back(amps[0] * amps[0]);
    }
    return curve;
}

int default_grover_iterations(int n) {
    if (n < 2) throw std::invalid_argument("grover iteration rule requires n >= 2");
    const int t_max = static_cast<int>(std::floor(2.0 * std::pow(2.0, n / 2.0)));
    const std::vector<double> curve = grover_success_curve(n, t_max);
    int best_t = 0;
    for (int t = 1; t <= t_max; ++t) {
        if (curve[static_cast<std::size_t>(t)] > curve[static_cast<std::size_t>(best_t)]) best_t = t;
    }
    return best_t;
}

Gf2Solution gf2_rank_and_solve(std::span<const std::uint32_t> strings, int n) {
    if (n < 1 || n > 31) throw std::invalid_argument("n out of range");
    // Row echelon over GF(2): rows[b] holds the reduced row with leading bit b.
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    for (std::uint32_t s : strings) {
        if (s >> n) throw std::invalid_argument("string wider than n bits");
        for (int b = n - 1; b >= 0 && s != 0; --b) {
            if (!((s >> b) & 1u)) continue;
            if (rows[static_cast<std::size_t>(b)] == 0) {
                rows[static_cast<std::size_t>(b)] = s;
                break;
            }
            s ^= rows[static_cast<std::size_t>(b)];
        }
    }

    Gf2Solution solution;
    for (std::uint32_t row : rows) solution.rank += row != 0;
    if (solution.rank == n) {
        throw std::invalid_argument("strings span the full space; no nonzero h is orthogonal to all");
    }
    if (solution.rank != n - 1) return solution;

    // Back-substitute to RREF so each pivot column appears in one row only.
    for (int b = 0; b < n; ++b) {
        if (rows[static_cast<std::size_t>(b)] == 0) continue;
        for (int b2 = b + 1; b2 < n; ++b2) {
            if ((rows[static_cast<std::size_t>(b2)] >> b) & 1u) {
                rows[static_cast<std::size_t>(b2)] ^= rows[static_cast<std::size_t>(b)];
            }
        }
    }

    // With rank n-1 there is one free column j; h has bit j set and, for each
    // pivot b, bit b equal to that row's entry in column j.
    int free_bit = 0;
    while (rows[static_cast<std::size_t>(free_bit)] != 0) ++free_bit;
    std::uint32_t h = std::uint32_t{1} << free_bit;
    for (int b = 0; b < n; ++b) {
        const std::uint32_t row = rows[static_cast<std::size_t>(b)];
        if (row != 0 && ((row >> free_bit) & 1u)) h |= std::uint32_t{1} << b;
    }
    solution.hidden = h;
    return solution;
}

}  // namespace advice50::algorithms
