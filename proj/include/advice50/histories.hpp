#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "advice50/families.hpp"
#include "advice50/statevector.hpp"

namespace advice50::histories {

enum class HistoryMode { Literal, Shortcut };

std::string mode_name(HistoryMode mode);

/// Half of the solution-specifying information handed to the classical
/// algorithm before it queries.
///
/// Rows form: (x, f_k(x)) pairs covering exactly half the table rows, and
/// only the "good" halves — those that do not by themselves determine the
/// solution (Deutsch: any single row; Deutsch&Jozsa: all advised values
/// equal; Simon: all advised values distinct). Bits form (Grover): (position,
/// bit) pairs for floor(n/2) positions of the location string, position 0
/// being its leftmost bit.
struct AdviceSpec {
    enum class Form { Rows, Bits };
    Form form = Form::Rows;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;

    bool operator==(const AdviceSpec&) const = default;
};

/// One classical computation path rendered in quantum notation.
///
/// pre_state is a phased product: K sharp at k, X on the queried arguments
/// (a single basis state for Deutsch, the uniform superposition over the
/// out-of-advice arguments otherwise), V sharp at v_initial. post_state is
/// the function-evaluation image of pre_state.
struct History {
    std::size_t k_index = 0;
    AdviceSpec advice;
    std::vector<std::uint32_t> query_xs;
    std::uint32_t v_initial = 0;
    double phase = 1.0;  ///< +1 for v_initial even branch, -1 for the odd one
    qstate::StateVector pre_state;
    qstate::StateVector post_state;
};

/// Complete list of good advice specs for this k, in canonical order
/// (ascending lexicographic over the sorted advised x's / positions).
std::vector<AdviceSpec> enumerate_good_advice(const families::OracleFamily& family,
                                              std::size_t k_index);

/// Literal mode: one history per (good advice x forced query set x initial V
/// value), with the V pair phased +1/-1 for one-bit-output kinds and the
/// single |0...0> start for Simon. Shortcut mode: the single per-k bunch
/// with X uniform over all arguments and V in its canonical initial state.
std::vector<History> build_histories(const families::OracleFamily& family,
                                     std::size_t k_index, HistoryMode mode);

/// Componentwise sum of the post states, unnormalized.
/// Throws std::invalid_argument when empty or layout-inconsistent.
qstate::RawSum sum_histories(std::span<const History> histories);

/// Residuals of the history-sum reconstruction of the function-evaluation
/// stage. Each per-k bunch is normalized and compared against the matching
/// k-branch of apply_oracle_xor(canonical initial state); the bunches are
/// then reassembled with uniform weights and compared globally. Failures are
/// report entries, never errors.
struct EquivalenceReport {
    families::Kind kind = families::Kind::Deutsch;
    int n = 1;
    HistoryMode mode = HistoryMode::Shortcut;
    double tolerance = qstate::kStateTol;
    std::size_t history_count = 0;
    std::size_t merged_duplicates = 0;
    std::vector<double> per_k_residuals;
    double max_residual = 0.0;
    double global_residual = 0.0;
    bool pass = false;
};

EquivalenceReport verify_history_equivalence(const families::OracleFamily& family,
                                             HistoryMode mode,
                                             double tol = qstate::kStateTol);

/// Why the history phases are fixed: decompose the initial V state into the
/// symmetric and antisymmetric combinations, alpha and beta weighted. The
/// symmetric component is invariant under function evaluation (the classical
/// computation gets lost); the antisymmetric component reproduces the phased
/// oracle stage. For Simon the report instead records that every sharp
/// initial V choice yields the same X superpositions with V labels permuted.
struct PhaseTransferReport {
    families::Kind kind = families::Kind::Deutsch;
    int n = 1;
    std::complex<double> alpha{0.0, 0.0};
    std::complex<double> beta{1.0, 0.0};
    double symmetric_residual = 0.0;      ///< oracle on symmetric component vs identity
    double antisymmetric_residual = 0.0;  ///< oracle on antisymmetric component vs phased stage
    double combined_residual = 0.0;       ///< alpha/beta mixture vs linear combination
    double basis_swap_residual = 0.0;     ///< Simon: V-relabel match across basis choices
    bool pass = false;
};

/// Throws std::invalid_argument when both alpha and beta are zero.
PhaseTransferReport phase_transfer_analysis(const families::OracleFamily& family,
                                            std::complex<double> alpha,
                                            std::complex<double> beta);

}  // namespace advice50::histories
