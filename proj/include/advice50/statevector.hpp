#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "advice50/families.hpp"
#include "advice50/layout.hpp"
#include "advice50/rng.hpp"

namespace advice50::qstate {

using Amplitude = std::complex<double>;

constexpr double kStateTol = 1e-12;        ///< exact-construction comparisons
constexpr double kDistributionTol = 1e-9;  ///< distribution comparisons

/// Dense complex amplitudes over the joint (K, X, V) index space.
/// Invariant: unit 2-norm within kStateTol (RawSum is the one exemption).
struct StateVector {
    RegisterLayout layout;
    std::vector<Amplitude> amplitudes;

    const Amplitude& at(std::size_t k, std::size_t x, std::size_t v) const {
        return amplitudes[layout.index(k, x, v)];
    }
    double norm() const;
};

/// Unnormalized accumulation; produced only by summing history renderings.
struct RawSum {
    RegisterLayout layout;
    std::vector<Amplitude> amplitudes;

    double norm() const;
    /// Throws std::runtime_error when the sum is numerically zero.
    StateVector normalized() const;
};

struct MeasurementRecord {
    Register reg = Register::K;
    std::size_t outcome = 0;
    double probability = 0.0;  ///< pre-measurement marginal of the outcome
};

/// amplitudes[(k,x,v)] = k_amps[k] * x_amps[x] * v_amps[v], normalized to
/// unit norm. Throws std::invalid_argument on dimension mismatch or an
/// all-zero factor.
StateVector make_product(const RegisterLayout& layout,
                         const std::vector<Amplitude>& k_amps,
                         const std::vector<Amplitude>& x_amps,
                         const std::vector<Amplitude>& v_amps);

/// Reversible function evaluation: moves the amplitude at (k, x, v) to
/// (k, x, v ^ f_k(x)). A pure basis permutation; K and X are untouched.
StateVector apply_oracle_xor(const StateVector& state, const families::OracleFamily& family);

/// n-fold Hadamard on the X factor only:
/// |x> -> 2^{-n/2} sum_y (-1)^{x.y} |y>.
StateVector apply_hadamard_x(const StateVector& state);

/// Grover diffusion on X: Hadamard, then the delta(0, x) evaluation XORed
/// into V, then Hadamard again. The three-step composite carries an overall
/// phase of -1 when V holds the antisymmetric state; that phase is stripped
/// here so the amplified branch comes out positive. Requires v_count == 2.
StateVector apply_grover_u(const StateVector& state);

/// Samples an outcome from the register's marginal and projects. The
/// returned state is the renormalized projection onto the outcome.
std::pair<MeasurementRecord, StateVector> measure_register(const StateVector& state,
                                                           Register reg, SplitRng& rng);
std::pair<MeasurementRecord, StateVector> measure_register(const StateVector& state,
                                                           Register reg, std::uint64_t rng_seed);

/// Probability vector of one register; sums to 1 within kStateTol.
std::vector<double> marginal_distribution(const StateVector& state, Register reg);

/// max_i |a_i - b_i| <= tol. No global-phase quotient: signs count.
/// Throws std::invalid_argument on layout mismatch.
bool states_close(const StateVector& a, const StateVector& b, double tol);
double max_amplitude_delta(const StateVector& a, const StateVector& b);

/// Uniform K, uniform X, and the per-kind initial V: the antisymmetric
/// (|0> - |1>)/sqrt(2) for the one-bit-output kinds, |0...0> for Simon.
StateVector canonical_initial_state(const families::OracleFamily& family);
std::vector<Amplitude> canonical_v_amps(families::Kind kind, std::size_t v_count);

}  // namespace advice50::qstate
