#pragma once

#include <cstddef>
#include <string>

namespace advice50::qstate {

enum class Register { K, X, V };

std::string register_name(Register reg);

/// Index space of the joint (K, X, V) register set.
///
/// K is indexed by the enumerated oracle choices, so k_count is a family
/// size rather than a power of two; X and V are ordinary qubit registers.
struct RegisterLayout {
    std::size_t k_count = 1;
    std::size_t x_count = 1;  ///< 2^n, n = query width in bits
    std::size_t v_count = 1;  ///< 2^m, m = output width in bits

    /// Joint dimension cap; keeps everything at desk scale.
    static constexpr std::size_t kDimCap = std::size_t{1} << 24;

    std::size_t dim() const { return k_count * x_count * v_count; }

    // Row-major, k-major / v-minor.
    std::size_t index(std::size_t k, std::size_t x, std::size_t v) const {
        return (k * x_count + x) * v_count + v;
    }

    std::size_t size_of(Register reg) const;
    int x_bits() const;
    int v_bits() const;

    /// Throws std::invalid_argument unless x_count and v_count are powers of
    /// two, k_count >= 1 and dim() <= kDimCap.
    void validate() const;

    bool operator==(const RegisterLayout&) const = default;
};

}  // namespace advice50::qstate
