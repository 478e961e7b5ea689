#include "advice50/histories.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace advice50::histories {

namespace {

using families::Kind;
using families::OracleFamily;
using qstate::Amplitude;
using qstate::RegisterLayout;
using qstate::StateVector;

RegisterLayout layout_of(const OracleFamily& family) {
    return RegisterLayout{family.size(), std::size_t{1} << family.n,
                          std::size_t{1} << family.m};
}

std::vector<Amplitude> basis_amps(std::size_t count, std::size_t index, double phase = 1.0) {
    std::vector<Amplitude> amps(count, Amplitude{0.0, 0.0});
    amps[index] = phase;
    return amps;
}

std::vector<Amplitude> support_amps(std::size_t count, const std::vector<std::uint32_t>& support) {
    std::vector<Amplitude> amps(count, Amplitude{0.0, 0.0});
    for (std::uint32_t x : support) amps[x] = 1.0;
    return amps;
}

// Size-r subsets of {0..total-1} in ascending lexicographic order.
std::vector<std::vector<std::uint32_t>> combinations(std::uint32_t total, std::uint32_t r) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> current(r);
    for (std::uint32_t i = 0; i < r; ++i) current[i] = i;
    while (true) {
        out.push_back(current);
        int i = static_cast<int>(r) - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] ==
                             total - r + static_cast<std::uint32_t>(i)) {
            --i;
        }
        if (i < 0) break;
        ++current[static_cast<std::size_t>(i)];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < r; ++j) {
            current[j] = current[j - 1] + 1;
        }
    }
    return out;
}

bool advice_is_good(const OracleFamily& family, std::size_t k_index,
                    const std::vector<std::uint32_t>& advised_xs) {
    std::vector<std::uint32_t> values;
    values.reserve(advised_xs.size());
    for (std::uint32_t x : advised_xs) values.push_back(family.evaluate(k_index, x));
    switch (family.kind) {
        case Kind::Deutsch:
            return true;  // a single row never pins the character
        case Kind::DeutschJozsa:
            // A half with two different values already says "balanced".
            return std::all_of(values.begin(), values.end(),
                               [&](std::uint32_t v) { return v == values.front(); });
        case Kind::Simon: {
            // A repeated value already pins the period.
            std::vector<std::uint32_t> sorted = values;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            // Distinct values can still pin it when the advised arguments
            // rule out all periods but one (their pairwise offsets cover
            // everything else); such a half carries 100% of the information
            // and is discarded too. For n = 2 this never triggers.
            int consistent_periods = 0;
            for (std::uint32_t h = 1; h < (1u << family.n); ++h) {
                bool pairs_advised_args = false;
                for (std::size_t i = 0; i < advised_xs.size() && !pairs_advised_args; ++i) {
                    for (std::size_t j = i + 1; j < advised_xs.size(); ++j) {
                        if ((advised_xs[i] ^ advised_xs[j]) == h) {
                            pairs_advised_args = true;
                            break;
                        }
                    }
                }
                if (!pairs_advised_args) ++consistent_periods;
            }
            return consistent_periods >= 2;
        }
        case Kind::Grover:
            return true;  // location bits are unstructured
    }
    throw std::logic_error("unreachable kind");
}

History make_history(const OracleFamily& family, std::size_t k_index, AdviceSpec advice,
                     std::vector<std::uint32_t> query_xs, const std::vector<Amplitude>& x_amps,
                     std::uint32_t v_initial, double phase,
                     const std::vector<Amplitude>& v_amps) {
    const RegisterLayout layout = layout_of(family);
    History history;
    history.k_index = k_index;
    history.advice = std::move(advice);
    history.query_xs = std::move(query_xs);
    history.v_initial = v_initial;
    history.phase = phase;
    history.pre_state =
        qstate::make_product(layout, basis_amps(layout.k_count, k_index), x_amps, v_amps);
    history.post_state = qstate::apply_oracle_xor(history.pre_state, family);
    return history;
}

}  // namespace

std::string mode_name(HistoryMode mode) {
    return mode == HistoryMode::Literal ? "literal" : "shortcut";
}

std::vector<AdviceSpec> enumerate_good_advice(const OracleFamily& family, std::size_t k_index) {
    if (k_index >= family.size()) throw std::out_of_range("oracle choice index out of range");
    std::vector<AdviceSpec> specs;

    if (family.kind == Kind::Grover) {
        // floor(n/2) advised bit positions of the location string.
        const auto n = static_cast<std::uint32_t>(family.n);
        const std::uint32_t location = families::character(family, k_index).bits;
        for (const auto& positions : combinations(n, n / 2)) {
            AdviceSpec spec;
            spec.form = AdviceSpec::Form::Bits;
            for (std::uint32_t p : positions) {
                // Position 0 is the leftmost bit of the location string.
                spec.entries.emplace_back(p, (location >> (n - 1 - p)) & 1u);
            }
            specs.push_back(std::move(spec));
        }
        return specs;
    }

    const auto rows = static_cast<std::uint32_t>(std::size_t{1} << family.n);
    for (const auto& advised : combinations(rows, rows / 2)) {
        if (!advice_is_good(family, k_index, advised)) continue;
        AdviceSpec spec;
        for (std::uint32_t x : advised) spec.entries.emplace_back(x, family.evaluate(k_index, x));
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::vector<History> build_histories(const OracleFamily& family, std::size_t k_index,
                                     HistoryMode mode) {
    if (k_index >= family.size()) throw std::out_of_range("oracle choice index out of range");
    const RegisterLayout layout = layout_of(family);
    std::vector<History> histories;

    if (mode == HistoryMode::Shortcut) {
        // One bunch per k: evaluate for every argument, not only the ones the
        // classical algorithm needs; the junk histories do no harm.
        std::vector<std::uint32_t> all_xs(layout.x_count);
        for (std::size_t x = 0; x < layout.x_count; ++x) all_xs[x] = static_cast<std::uint32_t>(x);
        histories.push_back(make_history(family, k_index, AdviceSpec{}, all_xs,
                                         std::vector<Amplitude>(layout.x_count, Amplitude{1.0, 0.0}),
                                         0, 1.0,
                                         qstate::canonical_v_amps(family.kind, layout.v_count)));
        return histories;
    }

    for (const AdviceSpec& advice : enumerate_good_advice(family, k_index)) {
        // The arguments the classical algorithm may evaluate next: everything
        // outside the advised rows, or every location consistent with the
        // advised bits.
        std::vector<std::uint32_t> queries;
        if (advice.form == AdviceSpec::Form::Bits) {
            const auto n = static_cast<std::uint32_t>(family.n);
            for (std::uint32_t x = 0; x < layout.x_count; ++x) {
                bool consistent = true;
                for (const auto& [position, bit] : advice.entries) {
                    if (((x >> (n - 1 - position)) & 1u) != bit) {
                        consistent = false;
                        break;
                    }
                }
                if (consistent) queries.push_back(x);
            }
        } else {
            for (std::uint32_t x = 0; x < layout.x_count; ++x) {
                const bool advised =
                    std::any_of(advice.entries.begin(), advice.entries.end(),
                                [x](const auto& e) { return e.first == x; });
                if (!advised) queries.push_back(x);
            }
        }
        const auto x_amps = support_amps(layout.x_count, queries);

        if (family.kind == Kind::Simon) {
            // Either sharp V start gives the same X superposition, so a single
            // all-zeroes start with phase +1 carries the whole bunch.
            histories.push_back(make_history(family, k_index, advice, queries, x_amps, 0, 1.0,
                                             basis_amps(layout.v_count, 0)));
        } else {
            histories.push_back(make_history(family, k_index, advice, queries, x_amps, 0, 1.0,
                                             basis_amps(layout.v_count, 0, 1.0)));
            histories.push_back(make_history(family, k_index, advice, queries, x_amps, 1, -1.0,
                                             basis_amps(layout.v_count, 1, -1.0)));
        }
    }
    return histories;
}

qstate::RawSum sum_histories(std::span<const History> histories) {
    if (histories.empty()) throw std::invalid_argument("no histories to sum");
    const RegisterLayout layout = histories.front().post_state.layout;
    qstate::RawSum sum;
    sum.layout = layout;
    sum.amplitudes.assign(layout.dim(), Amplitude{0.0, 0.0});
    for (const History& history : histories) {
        if (!(history.post_state.layout == layout)) {
            throw std::invalid_argument("histories with mismatched layouts");
        }
        for (std::size_t i = 0; i < sum.amplitudes.size(); ++i) {
            sum.amplitudes[i] += history.post_state.amplitudes[i];
        }
    }
    return sum;
}

EquivalenceReport verify_history_equivalence(const OracleFamily& family, HistoryMode mode,
                                             double tol) {
    const RegisterLayout layout = layout_of(family);
    const StateVector psi0 = qstate::canonical_initial_state(family);
    const StateVector psi1 = qstate::apply_oracle_xor(psi0, family);

    EquivalenceReport report;
    report.kind = family.kind;
    report.n = family.n;
    report.mode = mode;
    report.tolerance = tol;

    std::vector<Amplitude> assembled(layout.dim(), Amplitude{0.0, 0.0});
    const double k_weight = 1.0 / std::sqrt(static_cast<double>(layout.k_count));
    const std::size_t slice = layout.x_count * layout.v_count;

    for (std::size_t k = 0; k < layout.k_count; ++k) {
        std::vector<History> bunch = build_histories(family, k, mode);
        report.history_count += bunch.size();

        // Identical (pre, post) pairs collapse to one; normalization absorbs
        // the multiplicity anyway.
        std::vector<History> unique;
        for (auto& history : bunch) {
            const bool duplicate = std::any_of(
                unique.begin(), unique.end(), [&](const History& seen) {
                    return seen.v_initial == history.v_initial && seen.phase == history.phase &&
                           seen.query_xs == history.query_xs;
                });
            if (duplicate) {
                ++report.merged_duplicates;
            } else {
                unique.push_back(std::move(history));
            }
        }

        const StateVector bunch_state = sum_histories(unique).normalized();

        // Matching k-branch of the oracle stage, renormalized.
        double branch_norm_sq = 0.0;
        for (std::size_t i = 0; i < slice; ++i) {
            branch_norm_sq += std::norm(psi1.amplitudes[k * slice + i]);
        }
        const double branch_scale = 1.0 / std::sqrt(branch_norm_sq);

        double residual = 0.0;
        for (std::size_t i = 0; i < slice; ++i) {
            const Amplitude want = psi1.amplitudes[k * slice + i] * branch_scale;
            const Amplitude got = bunch_state.amplitudes[k * slice + i];
            residual = std::max(residual, std::abs(want - got));
            assembled[k * slice + i] = got * k_weight;
        }
        // Amplitude leaked outside the k-slice would be a construction bug.
        for (std::size_t i = 0; i < layout.dim(); ++i) {
            if (i / slice != k) {
                residual = std::max(residual, std::abs(bunch_state.amplitudes[i]));
            }
        }
        report.per_k_residuals.push_back(residual);
        report.max_residual = std::max(report.max_residual, residual);
    }

    for (std::size_t i = 0; i < layout.dim(); ++i) {
        report.global_residual =
            std::max(report.global_residual, std::abs(assembled[i] - psi1.amplitudes[i]));
    }
    report.pass = report.max_residual < tol && report.global_residual < tol;
    return report;
}

PhaseTransferReport phase_transfer_analysis(const OracleFamily& family,
                                            std::complex<double> alpha,
                                            std::complex<double> beta) {
    if (std::abs(alpha) < 1e-15 && std::abs(beta) < 1e-15) {
        throw std::invalid_argument("alpha and beta cannot both vanish");
    }
    const RegisterLayout layout = layout_of(family);
    const std::vector<Amplitude> uniform_k(layout.k_count, Amplitude{1.0, 0.0});
    const std::vector<Amplitude> uniform_x(layout.x_count, Amplitude{1.0, 0.0});

    PhaseTransferReport report;
    report.kind = family.kind;
    report.n = family.n;
    report.alpha = alpha;
    report.beta = beta;

    if (family.kind == Kind::Simon) {
        // Any sharp V start gives the same X superpositions with the V labels
        // permuted by the start value.
        const StateVector base = qstate::apply_oracle_xor(
            qstate::make_product(layout, uniform_k, uniform_x, basis_amps(layout.v_count, 0)),
            family);
        for (std::size_t d = 1; d < layout.v_count; ++d) {
            const StateVector alt = qstate::apply_oracle_xor(
                qstate::make_product(layout, uniform_k, uniform_x, basis_amps(layout.v_count, d)),
                family);
            double residual = 0.0;
            for (std::size_t k = 0; k < layout.k_count; ++k) {
                for (std::size_t x = 0; x < layout.x_count; ++x) {
                    for (std::size_t v = 0; v < layout.v_count; ++v) {
                        residual = std::max(residual, std::abs(alt.at(k, x, v ^ d) - base.at(k, x, v)));
                    }
                }
            }
            report.basis_swap_residual = std::max(report.basis_swap_residual, residual);
        }
        report.pass = report.basis_swap_residual < qstate::kStateTol;
        return report;
    }

    if (family.m != 1) throw std::invalid_argument("phase analysis expects a one-bit output");

    const std::vector<Amplitude> sym{1.0, 1.0};
    const std::vector<Amplitude> antisym{1.0, -1.0};
    const StateVector psi_sym = qstate::make_product(layout, uniform_k, uniform_x, sym);
    const StateVector psi_anti = qstate::make_product(layout, uniform_k, uniform_x, antisym);

    // Symmetric component: function evaluation acts as the identity.
    report.symmetric_residual =
        qstate::max_amplitude_delta(qstate::apply_oracle_xor(psi_sym, family), psi_sym);

    // Antisymmetric component: function evaluation equals the phased stage,
    // each (k, x) cell multiplied by (-1)^{f_k(x)}.
    StateVector phased = psi_anti;
    for (std::size_t k = 0; k < layout.k_count; ++k) {
        for (std::size_t x = 0; x < layout.x_count; ++x) {
            if (family.evaluate(k, static_cast<std::uint32_t>(x)) == 0) continue;
            for (std::size_t v = 0; v < layout.v_count; ++v) {
                phased.amplitudes[layout.index(k, x, v)] = -phased.amplitudes[layout.index(k, x, v)];
            }
        }
    }
    report.antisymmetric_residual =
        qstate::max_amplitude_delta(qstate::apply_oracle_xor(psi_anti, family), phased);

    // General start: evaluation splits linearly across the two components.
    const double scale = std::sqrt(std::norm(alpha) + std::norm(beta));
    const std::complex<double> a = alpha / scale;
    const std::complex<double> b = beta / scale;
    const std::vector<Amplitude> mixed{a + b, a - b};
    double combined = 0.0;
    if (std::abs(mixed[0]) > 1e-15 || std::abs(mixed[1]) > 1e-15) {
        const StateVector evolved = qstate::apply_oracle_xor(
            qstate::make_product(layout, uniform_k, uniform_x, mixed), family);
        for (std::size_t i = 0; i < evolved.amplitudes.size(); ++i) {
            const Amplitude want = a * psi_sym.amplitudes[i] + b * phased.amplitudes[i];
            combined = std::max(combined, std::abs(evolved.amplitudes[i] - want));
        }
    }
    report.combined_residual = combined;
    report.pass = report.symmetric_residual < qstate::kStateTol &&
                  report.antisymmetric_residual < qstate::kStateTol &&
                  report.combined_residual < qstate::kStateTol;
    return report;
}

}  // namespace advice50::histories
