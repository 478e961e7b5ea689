#include "advice50/families.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace advice50::families {

namespace {

// Largest family we are willing to enumerate; the analyzer and the history
// machinery need the full table set in memory.
constexpr std::size_t kFamilySizeCap = 4096;

std::string make_suffix(const std::vector<std::uint32_t>& values, int m) {
    std::string s;
    s.reserve(values.size() * static_cast<std::size_t>(m));
    for (std::uint32_t value : values) {
        for (int b = m - 1; b >= 0; --b) {
            s.push_back(((value >> b) & 1u) ? '1' : '0');
        }
    }
    return s;
}

void assign_indices(std::vector<FunctionTable>& tables) {
    std::sort(tables.begin(), tables.end(),
              [](const FunctionTable& a, const FunctionTable& b) { return a.suffix < b.suffix; });
    for (std::size_t i = 0; i < tables.size(); ++i) {
        tables[i].index = i;
    }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return result;
}

std::vector<FunctionTable> enumerate_deutsch() {
    std::vector<FunctionTable> tables;
    for (std::uint32_t t = 0; t < 4; ++t) {
        FunctionTable table;
        table.values = {(t >> 1) & 1u, t & 1u};
        table.suffix = make_suffix(table.values, 1);
        tables.push_back(std::move(table));
    }
    return tables;
}

std::vector<FunctionTable> enumerate_dj(int n) {
    const std::uint32_t rows = 1u << n;
    if (rows > 32) throw std::invalid_argument("deutsch-jozsa family: n too large");
    const std::uint64_t predicted = 2 + binomial(rows, rows / 2);
    if (predicted > kFamilySizeCap) {
        throw std::invalid_argument("deutsch-jozsa family size exceeds cap");
    }
    std::vector<FunctionTable> tables;
    tables.reserve(predicted);
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << rows); ++t) {
        const int ones = std::popcount(t);
        if (ones != 0 && ones != static_cast<int>(rows) && ones != static_cast<int>(rows / 2)) {
            continue;
        }
        FunctionTable table;
        table.values.resize(rows);
        for (std::uint32_t x = 0; x < rows; ++x) {
            table.values[x] = static_cast<std::uint32_t>((t >> (rows - 1 - x)) & 1u);
        }
        table.suffix = make_suffix(table.values, 1);
        tables.push_back(std::move(table));
    }
    return tables;
}

std::vector<FunctionTable> enumerate_simon(int n) {
    if (n < 2) throw std::invalid_argument("simon family requires n >= 2");
    const std::uint32_t rows = 1u << n;
    const std::uint32_t pair_count = rows / 2;
    std::uint64_t factorial = 1;
    for (std::uint32_t i = 2; i <= pair_count; ++i) factorial *= i;
    const std::uint64_t predicted = (rows - 1) * factorial;
    if (predicted > kFamilySizeCap) {
        throw std::invalid_argument("simon family size exceeds cap");
    }

    std::vector<FunctionTable> tables;
    tables.reserve(predicted);
    for (std::uint32_t h = 1; h < rows; ++h) {
        // Representatives of the {x, x^h} pairs, ascending.
        std::vector<std::uint32_t> reps;
        for (std::uint32_t x = 0; x < rows; ++x) {
            if (x < (x ^ h)) reps.push_back(x);
        }
        std::vector<std::uint32_t> assignment(pair_count);
        std::iota(assignment.begin(), assignment.end(), 0u);
        do {
            FunctionTable table;
            table.values.resize(rows);
            for (std::uint32_t p = 0; p < pair_count; ++p) {
                table.values[reps[p]] = assignment[p];
                table.values[reps[p] ^ h] = assignment[p];
            }
            table.suffix = make_suffix(table.values, n - 1);
            tables.push_back(std::move(table));
        } while (std::next_permutation(assignment.begin(), assignment.end()));
    }
    return tables;
}

std::vector<FunctionTable> enumerate_grover(int n) {
    const std::uint32_t rows = 1u << n;
    if (rows > kFamilySizeCap) throw std::invalid_argument("grover family size exceeds cap");
    std::vector<FunctionTable> tables;
    tables.reserve(rows);
    for (std::uint32_t loc = 0; loc < rows; ++loc) {
        FunctionTable table;
        table.values.resize(rows);
        for (std::uint32_t x = 0; x < rows; ++x) {
            table.values[x] = (x == loc) ? 1u : 0u;
        }
        table.suffix = bit_string(loc, n);
        tables.push_back(std::move(table));
    }
    return tables;
}

}  // namespace

std::string kind_name(Kind kind) {
    switch (kind) {
        case Kind::Deutsch: return "deutsch";
        case Kind::DeutschJozsa: return "dj";
        case Kind::Simon: return "simon";
        case Kind::Grover: return "grover";
    }
    throw std::logic_error("unreachable kind");
}

Kind kind_from_name(const std::string& name) {
    if (name == "deutsch") return Kind::Deutsch;
    if (name == "dj") return Kind::DeutschJozsa;
    if (name == "simon") return Kind::Simon;
    if (name == "grover") return Kind::Grover;
    throw std::invalid_argument("unknown kind: " + name);
}

std::string bit_string(std::uint32_t value, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int b = 0; b < width; ++b) {
        if ((value >> b) & 1u) s[static_cast<std::size_t>(width - 1 - b)] = '1';
    }
    return s;
}

int gf2_dot(std::uint32_t a, std::uint32_t b) {
    return std::popcount(a & b) & 1;
}

std::uint32_t OracleFamily::evaluate(std::size_t k_index, std::uint32_t x) const {
    if (k_index >= tables.size()) throw std::out_of_range("oracle choice index out of range");
    const auto& values = tables[k_index].values;
    if (x >= values.size()) throw std::out_of_range("query argument out of range");
    return values[x];
}

OracleFamily enumerate_family(Kind kind, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    OracleFamily family;
    family.kind = kind;
    family.n = n;
    switch (kind) {
        case Kind::Deutsch:
            if (n != 1) throw std::invalid_argument("deutsch family is fixed at n = 1");
            family.m = 1;
            family.tables = enumerate_deutsch();
            break;
        case Kind::DeutschJozsa:
            family.m = 1;
            family.tables = enumerate_dj(n);
            break;
        case Kind::Simon:
            family.m = n - 1;
            family.tables = enumerate_simon(n);
            break;
        case Kind::Grover:
            family.m = 1;
            family.tables = enumerate_grover(n);
            break;
    }
    assign_indices(family.tables);
    return family;
}

SolutionCharacter character(const OracleFamily& family, std::size_t k_index) {
    if (k_index >= family.size()) throw std::out_of_range("oracle choice index out of range");
    const auto& values = family.tables[k_index].values;
    switch (family.kind) {
        case Kind::Deutsch:
        case Kind::DeutschJozsa: {
            const bool constant =
                std::all_of(values.begin(), values.end(),
                            [&](std::uint32_t v) { return v == values.front(); });
            return {constant ? SolutionCharacter::Tag::Constant : SolutionCharacter::Tag::Balanced, 0};
        }
        case Kind::Simon: {
            // The unique collision offset: f(0) reappears at exactly one y != 0.
            for (std::uint32_t y = 1; y < values.size(); ++y) {
                if (values[y] == values[0]) return {SolutionCharacter::Tag::HiddenString, y};
            }
            throw std::logic_error("simon table without a collision");
        }
        case Kind::Grover: {
            for (std::uint32_t x = 0; x < values.size(); ++x) {
                if (values[x] == 1u) return {SolutionCharacter::Tag::Location, x};
            }
            throw std::logic_error("grover table without a marked location");
        }
    }
    throw std::logic_error("unreachable kind");
}

std::vector<std::uint32_t> orthogonal_strings(std::uint32_t h, int n) {
    if (h == 0) throw std::invalid_argument("hidden string must be nonzero");
    const std::uint32_t count = 1u << n;
    if (h >= count) throw std::invalid_argument("hidden string wider than n bits");
    std::vector<std::uint32_t> result;
    result.reserve(count / 2);
    for (std::uint32_t s = 0; s < count; ++s) {
        if (gf2_dot(s, h) == 0) result.push_back(s);
    }
    return result;
}

}  // namespace advice50::families
