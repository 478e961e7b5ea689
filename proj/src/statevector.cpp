#include "advice50/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace advice50::qstate {

namespace {

constexpr double kNormTol = 1e-12;

bool is_power_of_two(std::size_t v) { return v != 0 && std::has_single_bit(v); }

double norm_of(const std::vector<Amplitude>& amps) {
    double sum = 0.0;
    for (const auto& a : amps) sum += std::norm(a);
    return std::sqrt(sum);
}

void require_layout_match(const RegisterLayout& a, const RegisterLayout& b) {
    if (!(a == b)) throw std::invalid_argument("register layouts do not match");
}

// XOR the value of fn(k, x) into the V index; a basis permutation.
template <typename Fn>
StateVector apply_value_xor(const StateVector& state, Fn&& fn) {
    const RegisterLayout& layout = state.layout;
    StateVector out;
    out.layout = layout;
    out.amplitudes.assign(layout.dim(), Amplitude{0.0, 0.0});
    for (std::size_t k = 0; k < layout.k_count; ++k) {
        for (std::size_t x = 0; x < layout.x_count; ++x) {
            const std::size_t flip = fn(k, static_cast<std::uint32_t>(x));
            const std::size_t base = (k * layout.x_count + x) * layout.v_count;
            for (std::size_t v = 0; v < layout.v_count; ++v) {
                out.amplitudes[base + (v ^ flip)] = state.amplitudes[base + v];
            }
        }
    }
    return out;
}

}  // namespace

std::string register_name(Register reg) {
    switch (reg) {
        case Register::K: return "K";
        case Register::X: return "X";
        case Register::V: return "V";
    }
    throw std::logic_error("unreachable register");
}

std::size_t RegisterLayout::size_of(Register reg) const {
    switch (reg) {
        case Register::K: return k_count;
        case Register::X: return x_count;
        case Register::V: return v_count;
    }
    throw std::logic_error("unreachable register");
}

int RegisterLayout::x_bits() const { return std::countr_zero(x_count); }
int RegisterLayout::v_bits() const { return std::countr_zero(v_count); }

void RegisterLayout::validate() const {
    if (k_count < 1) throw std::invalid_argument("k_count must be at least 1");
    if (!is_power_of_two(x_count)) throw std::invalid_argument("x_count must be a power of two");
    if (!is_power_of_two(v_count)) throw std::invalid_argument("v_count must be a power of two");
    if (dim() > kDimCap) throw std::invalid_argument("joint dimension exceeds the desk-scale cap");
}

double StateVector::norm() const { return norm_of(amplitudes); }
double RawSum::norm() const { return norm_of(amplitudes); }

StateVector RawSum::normalized() const {
    const double n = norm();
    if (n < kNormTol) throw std::runtime_error("history sum is numerically zero");
    StateVector state;
    state.layout = layout;
    state.amplitudes.resize(amplitudes.size());
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        state.amplitudes[i] = amplitudes[i] / n;
    }
    return state;
}

StateVector make_product(const RegisterLayout& layout,
                         const std::vector<Amplitude>& k_amps,
                         const std::vector<Amplitude>& x_amps,
                         const std::vector<Amplitude>& v_amps) {
    layout.validate();
    if (k_amps.size() != layout.k_count || x_amps.size() != layout.x_count ||
        v_amps.size() != layout.v_count) {
        throw std::invalid_argument("amplitude vector does not match its register dimension");
    }
    if (norm_of(k_amps) < kNormTol || norm_of(x_amps) < kNormTol || norm_of(v_amps) < kNormTol) {
        throw std::invalid_argument("all-zero register amplitudes");
    }
    StateVector state;
    state.layout = layout;
    state.amplitudes.resize(layout.dim());
    std::size_t i = 0;
    for (std::size_t k = 0; k < layout.k_count; ++k) {
        for (std::size_t x = 0; x < layout.x_count; ++x) {
            const Amplitude kx = k_amps[k] * x_amps[x];
            for (std::size_t v = 0; v < layout.v_count; ++v) {
                state.amplitudes[i++] = kx * v_amps[v];
            }
        }
    }
    const double n = norm_of(state.amplitudes);
    for (auto& a : state.amplitudes) a /= n;
    return state;
}

StateVector apply_oracle_xor(const StateVector& state, const families::OracleFamily& family) {
    const RegisterLayout& layout = state.layout;
    if (layout.k_count != family.size() ||
        layout.x_count != (std::size_t{1} << family.n) ||
        layout.v_count != (std::size_t{1} << family.m)) {
        throw std::invalid_argument("state layout does not match the oracle family");
    }
    return apply_value_xor(state, [&family](std::size_t k, std::uint32_t x) {
        return static_cast<std::size_t>(family.evaluate(k, x));
    });
}

StateVector apply_hadamard_x(const StateVector& state) {
    const RegisterLayout& layout = state.layout;
    StateVector out = state;
    const int n = layout.x_bits();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int b = 0; b < n; ++b) {
        const std::size_t stride = layout.v_count << b;
        for (std::size_t k = 0; k < layout.k_count; ++k) {
            const std::size_t base = k * layout.x_count * layout.v_count;
            for (std::size_t x = 0; x < layout.x_count; ++x) {
                if ((x >> b) & 1u) continue;
                const std::size_t row = base + x * layout.v_count;
                for (std::size_t v = 0; v < layout.v_count; ++v) {
                    const Amplitude lo = out.amplitudes[row + v];
                    const Amplitude hi = out.amplitudes[row + stride + v];
                    out.amplitudes[row + v] = (lo + hi) * inv_sqrt2;
                    out.amplitudes[row + stride + v] = (lo - hi) * inv_sqrt2;
                }
            }
        }
    }
    return out;
}

StateVector apply_grover_u(const StateVector& state) {
    if (state.layout.v_count != 2) {
        throw std::invalid_argument("grover diffusion requires a one-qubit output register");
    }
    StateVector s = apply_hadamard_x(state);
    s = apply_value_xor(s, [](std::size_t, std::uint32_t x) -> std::size_t {
        return x == 0 ? 1 : 0;
    });
    s = apply_hadamard_x(s);
    for (auto& a : s.amplitudes) a = -a;
    return s;
}

std::vector<double> marginal_distribution(const StateVector& state, Register reg) {
    const RegisterLayout& layout = state.layout;
    std::vector<double> probs(layout.size_of(reg), 0.0);
    std::size_t i = 0;
    for (std::size_t k = 0; k < layout.k_count; ++k) {
        for (std::size_t x = 0; x < layout.x_count; ++x) {
            for (std::size_t v = 0; v < layout.v_count; ++v, ++i) {
                const double p = std::norm(state.amplitudes[i]);
                switch (reg) {
                    case Register::K: probs[k] += p; break;
                    case Register::X: probs[x] += p; break;
                    case Register::V: probs[v] += p; break;
                }
            }
        }
    }
    return probs;
}

std::pair<MeasurementRecord, StateVector> measure_register(const StateVector& state,
                                                           Register reg, SplitRng& rng) {
    const std::vector<double> probs = marginal_distribution(state, reg);
    const double u = rng.uniform01();
    std::size_t outcome = probs.size() - 1;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        cumulative += probs[i];
        if (u < cumulative) {
            outcome = i;
            break;
        }
    }
    if (probs[outcome] <= 0.0) {
        throw std::runtime_error("internal error: measured outcome has zero marginal");
    }

    const RegisterLayout& layout = state.layout;
    StateVector projected;
    projected.layout = layout;
    projected.amplitudes.assign(layout.dim(), Amplitude{0.0, 0.0});
    const double scale = 1.0 / std::sqrt(probs[outcome]);
    std::size_t i = 0;
    for (std::size_t k = 0; k < layout.k_count; ++k) {
        for (std::size_t x = 0; x < layout.x_count; ++x) {
            for (std::size_t v = 0; v < layout.v_count; ++v, ++i) {
                const std::size_t coord = reg == Register::K ? k : reg == Register::X ? x : v;
                if (coord == outcome) projected.amplitudes[i] = state.amplitudes[i] * scale;
            }
        }
    }
    return {MeasurementRecord{reg, outcome, probs[outcome]}, std::move(projected)};
}

std::pair<MeasurementRecord, StateVector> measure_register(const StateVector& state,
                                                           Register reg, std::uint64_t rng_seed) {
    SplitRng rng(rng_seed);
    return measure_register(state, reg, rng);
}

bool states_close(const StateVector& a, const StateVector& b, double tol) {
    return max_amplitude_delta(a, b) <= tol;
}

double max_amplitude_delta(const StateVector& a, const StateVector& b) {
    require_layout_match(a.layout, b.layout);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
        worst = std::max(worst, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    }
    return worst;
}

std::vector<Amplitude> canonical_v_amps(families::Kind kind, std::size_t v_count) {
    std::vector<Amplitude> v(v_count, Amplitude{0.0, 0.0});
    if (kind == families::Kind::Simon) {
        v[0] = 1.0;
    } else {
        v[0] = 1.0;
        v[1] = -1.0;
    }
    return v;
}

StateVector canonical_initial_state(const families::OracleFamily& family) {
    RegisterLayout layout{family.size(), std::size_t{1} << family.n, std::size_t{1} << family.m};
    const std::vector<Amplitude> k_amps(layout.k_count, Amplitude{1.0, 0.0});
    const std::vector<Amplitude> x_amps(layout.x_count, Amplitude{1.0, 0.0});
    return make_product(layout, k_amps, x_amps, canonical_v_amps(family.kind, layout.v_count));
}

}  // namespace advice50::qstate
