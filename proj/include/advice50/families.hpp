#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace advice50::families {

enum class Kind { Deutsch, DeutschJozsa, Simon, Grover };

std::string kind_name(Kind kind);  // "deutsch" | "dj" | "simon" | "grover"
Kind kind_from_name(const std::string& name);

/// MSB-first bit string of fixed width, e.g. bit_string(2, 2) == "10".
std::string bit_string(std::uint32_t value, int width);

/// GF(2) inner product of two bit strings.
int gf2_dot(std::uint32_t a, std::uint32_t b);

/// One oracle choice: the function table f_k and the bit string naming it.
///
/// For the structured kinds the suffix is the table itself, the values for
/// increasing x concatenated as m-bit fields. For Grover the suffix is the
/// n-bit database location.
struct FunctionTable {
    std::size_t index = 0;              ///< position in the family's canonical order
    std::string suffix;
    std::vector<std::uint32_t> values;  ///< values[x] = f_k(x)
};

struct SolutionCharacter {
    enum class Tag { Constant, Balanced, HiddenString, Location };
    Tag tag = Tag::Constant;
    std::uint32_t bits = 0;  ///< h for HiddenString, database location for Location

    bool operator==(const SolutionCharacter&) const = default;
};

struct OracleFamily {
    Kind kind = Kind::Deutsch;
    int n = 1;  ///< query register width in bits
    int m = 1;  ///< output width in bits
    std::vector<FunctionTable> tables;

    std::size_t size() const { return tables.size(); }

    /// Table lookup f_k(x). Throws std::out_of_range on bad indices.
    std::uint32_t evaluate(std::size_t k_index, std::uint32_t x) const;
};

/// Complete, duplicate-free enumeration of a kind in canonical order
/// (ascending suffix read as an unsigned integer).
///
///   Deutsch        all 4 binary functions on one bit (n must be 1)
///   DeutschJozsa   all constant plus all balanced f:{0,1}^n -> {0,1}
///   Simon          all two-to-one f:{0,1}^n -> {0,1}^{n-1} with
///                  f(x) = f(y) iff x == y or x == y ^ h, h != 0
///   Grover         delta(k, x) for every location k
///
/// Throws std::invalid_argument when n is out of range or the family size
/// exceeds the desk-scale cap.
OracleFamily enumerate_family(Kind kind, int n);

/// Per-choice solution character: Constant/Balanced for Deutsch and
/// Deutsch&Jozsa, the hidden string h for Simon (recovered by collision
/// scan), the location for Grover.
SolutionCharacter character(const OracleFamily& family, std::size_t k_index);

/// All 2^{n-1} strings s with s . h == 0 (mod 2), ascending.
/// Throws std::invalid_argument when h is zero or too wide.
std::vector<std::uint32_t> orthogonal_strings(std::uint32_t h, int n);

}  // namespace advice50::families
